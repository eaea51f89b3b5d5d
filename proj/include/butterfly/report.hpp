#pragma once

#include <string>
#include <vector>

namespace butterfly {

/// Outcome of a verification: pass/fail plus human-readable counterexamples.
struct CheckReport {
  bool pass = true;
  std::vector<std::string> counterexamples;

  void fail(std::string what) {
    pass = false;
    counterexamples.push_back(std::move(what));
  }
};

}  // namespace butterfly
