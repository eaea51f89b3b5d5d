#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "butterfly/coexistence.hpp"
#include "butterfly/flux.hpp"

namespace butterfly {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
    pass = pass && ok;
  }
};

struct SuiteOptions {
  std::int64_t q_max = 0;  // 0 selects the suite's own default
  std::uint64_t seed = 0;
  std::int64_t n_max = 12;
  std::int64_t max_l = 2;
};

/// Reproducible pairs of distinct reduced fluxes with q <= q_limit and
/// |phi - phi'| <= max_delta.
std::vector<std::pair<RationalFlux, RationalFlux>> random_flux_pairs(std::size_t count, std::int64_t q_limit,
                                                                     double max_delta, std::uint64_t seed);

/// A probe disc centred on a gap edge (so it straddles a phase boundary),
/// drawn from fluxes with 3 <= q <= 10.
struct WadaDisc {
  PlanePoint center;
  double radius = 0.0;
};
WadaDisc seeded_wada_disc(std::uint64_t seed);

SuiteResult run_symmetry_suite(const SuiteOptions& options);
SuiteResult run_bounds_suite(const SuiteOptions& options);
SuiteResult run_proposition_suite(const SuiteOptions& options);
SuiteResult run_wada_suite(const SuiteOptions& options);
SuiteResult run_dimension_suite(const SuiteOptions& options);

/// Dispatches on "symmetry", "bounds", "proposition", "wada", "dimension".
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace butterfly
