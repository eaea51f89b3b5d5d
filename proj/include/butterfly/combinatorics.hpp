#pragma once

#include <cstdint>
#include <vector>

#include "butterfly/flux.hpp"
#include "butterfly/labels.hpp"
#include "butterfly/report.hpp"

namespace butterfly {

/// Euler's phi by trial division. Throws std::domain_error for n < 1.
std::int64_t totient(std::int64_t n);

/// Farey set of order m: reduced fractions in [0, 1] with denominator <= m,
/// sorted and including both 0/1 and 1/1.
struct FareySet {
  std::int64_t order = 0;
  std::vector<RationalFlux> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const RationalFlux& f) const;
};

/// Throws std::invalid_argument for m < 1.
FareySet farey_set(std::int64_t m);

/// Number of connected components of the pure phase P(k) and the flux values
/// of its wing-tips.
struct ComponentCount {
  std::int64_t k = 0;
  std::int64_t count = 0;
  FareySet tips;
};

ComponentCount component_count(std::int64_t k);

/// count(k) * pi^2 / (12 k^2); tends to 1. Throws std::domain_error for k = 0.
double asymptotic_ratio(std::int64_t k);

/// Checks that label k is absent from every open gap at the wing-tip fluxes
/// F_{2|k|}, and present at some flux with q = 2|k| + 1. Throws
/// std::invalid_argument if the atlas does not reach q = 2|k| + 1.
CheckReport tip_absence_check(const PhaseAtlas& atlas, std::int64_t k);

}  // namespace butterfly
