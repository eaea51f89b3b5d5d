#include "butterfly/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace butterfly {

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw std::domain_error("totient is defined for n >= 1");
  std::int64_t result = n;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool FareySet::contains(const RationalFlux& f) const {
  return std::binary_search(elements.begin(), elements.end(), f);
}

FareySet farey_set(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("Farey order must be >= 1");
  // Successor recurrence for consecutive Farey fractions a/b < c/d.
  FareySet set{m, {}};
  std::int64_t a = 0, b = 1, c = 1, d = m;
  set.elements.emplace_back(a, b);
  while (c <= m) {
    const std::int64_t t = (m + b) / d;
    set.elements.emplace_back(c, d);
    std::tie(a, b, c, d) = std::make_tuple(c, d, t * c - a, t * d - b);
  }
  return set;
}

ComponentCount component_count(std::int64_t k) {
  if (k == 0) return {0, 2, FareySet{}};
  const std::int64_t m = 2 * std::abs(k);
  std::int64_t sum = 0;
  for (std::int64_t q = 1; q <= m; ++q) sum += totient(q);
  return {k, sum, farey_set(m)};
}

double asymptotic_ratio(std::int64_t k) {
  if (k == 0) throw std::domain_error("asymptotic ratio is undefined for k = 0");
  const double count = static_cast<double>(component_count(k).count);
  const double kk = static_cast<double>(k);
  return count * std::numbers::pi * std::numbers::pi / (12.0 * kk * kk);
}

CheckReport tip_absence_check(const PhaseAtlas& atlas, std::int64_t k) {
  const std::int64_t m = 2 * std::abs(k);
  if (atlas.q_max() < m + 1) {
    throw std::invalid_argument("tip check for k=" + std::to_string(k) + " needs an atlas with q_max >= " +
                                std::to_string(m + 1));
  }
  CheckReport report;
  auto has_open_label = [k](const std::vector<GapRecord>& records) {
    return std::any_of(records.begin(), records.end(),
                       [k](const GapRecord& r) { return r.k() == k && !r.central_closed(); });
  };

  if (k == 0) {
    for (const auto& entry : atlas.entries()) {
      if (!has_open_label(entry.records)) report.fail("k=0 missing at " + entry.flux.str());
    }
    return report;
  }

  for (const RationalFlux& tip : farey_set(m).elements) {
    const auto* records = atlas.at(tip);
    if (records == nullptr) {
      report.fail("wing-tip " + tip.str() + " missing from atlas");
    } else if (has_open_label(*records)) {
      report.fail("k=" + std::to_string(k) + " present at wing-tip " + tip.str());
    }
  }
  bool present = false;
  for (const auto& entry : atlas.entries()) {
    if (entry.flux.q() == m + 1 && has_open_label(entry.records)) {
      present = true;
      break;
    }
  }
  if (!present) report.fail("k=" + std::to_string(k) + " absent at every flux with q=" + std::to_string(m + 1));
  return report;
}

}  // namespace butterfly
