#include <iostream>
#include <string>
#include <vector>

#include "butterfly/cli.hpp"

int main(int argc, char** argv) {
  return butterfly::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
