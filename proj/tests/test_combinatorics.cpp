#include <doctest.h>

#include <cmath>
#include <numeric>

#include "butterfly/combinatorics.hpp"
#include "oracles.hpp"

using namespace butterfly;

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(2) == 1);
  CHECK(totient(3) == 2);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK_THROWS_AS(totient(0), std::domain_error);
  for (std::int64_t n = 1; n <= 500; ++n) CHECK(totient(n) == oracle::brute_totient(n));
}

TEST_CASE("Farey sets") {
  const auto f1 = farey_set(1);
  CHECK(f1.elements == std::vector<RationalFlux>{{0, 1}, {1, 1}});
  const auto f2 = farey_set(2);
  CHECK(f2.elements == std::vector<RationalFlux>{{0, 1}, {1, 2}, {1, 1}});
  const auto f3 = farey_set(3);
  CHECK(f3.elements == std::vector<RationalFlux>{{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}});
  CHECK(f3.contains(RationalFlux(2, 3)));
  CHECK_FALSE(f3.contains(RationalFlux(1, 4)));
  CHECK_THROWS_AS(farey_set(0), std::invalid_argument);
}

TEST_CASE("Farey size matches the totient sum up to 200") {
  std::int64_t sum = 0;
  for (std::int64_t m = 1; m <= 200; ++m) {
    sum += totient(m);
    const auto f = farey_set(m);
    CHECK(static_cast<std::int64_t>(f.size()) - 1 == sum);
    CHECK(std::is_sorted(f.elements.begin(), f.elements.end()));
    CHECK(std::adjacent_find(f.elements.begin(), f.elements.end()) == f.elements.end());
  }
}

TEST_CASE("component counts") {
  CHECK(component_count(1).count == 2);
  CHECK(component_count(0).count == 2);
  CHECK(component_count(0).tips.elements.empty());
  CHECK(component_count(2).count == 6);
  CHECK(component_count(-3).count == 12);
  for (std::int64_t k = 1; k <= 50; ++k) {
    const auto c = component_count(k);
    CHECK(c.count == component_count(-k).count);
    CHECK(c.count == static_cast<std::int64_t>(c.tips.size()) - 1);
  }
}

TEST_CASE("asymptotic ratio") {
  CHECK(asymptotic_ratio(1) == doctest::Approx(2 * M_PI * M_PI / 12));
  // sum_{q<=20} phi(q) = 128
  CHECK(component_count(10).count == 128);
  CHECK(asymptotic_ratio(10) == doctest::Approx(128 * M_PI * M_PI / 1200));
  CHECK(asymptotic_ratio(10) >= 0.9);
  CHECK(asymptotic_ratio(10) <= 1.2);
  CHECK(asymptotic_ratio(100) >= 0.98);
  CHECK(asymptotic_ratio(100) <= 1.05);
  CHECK(std::abs(asymptotic_ratio(200) - 1) < std::abs(asymptotic_ratio(20) - 1));
  CHECK_THROWS_AS(asymptotic_ratio(0), std::domain_error);
}

TEST_CASE("wing-tip absence") {
  const PhaseAtlas atlas = build_atlas(13);
  CHECK(tip_absence_check(atlas, 0).pass);
  for (std::int64_t k = -5; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(tip_absence_check(atlas, k).pass);
  }
  // k = 1: absent at 0, 1/2, 1 and present at 1/3.
  for (auto f : {RationalFlux(0, 1), RationalFlux(1, 2), RationalFlux(1, 1)}) {
    for (const auto& r : *atlas.at(f)) CHECK_FALSE((r.k() == 1 && r.open()));
  }
  CHECK((*atlas.at(RationalFlux(1, 3)))[1].k() == 1);
  CHECK((*atlas.at(RationalFlux(1, 5)))[2].k() == 2);
  CHECK_THROWS_AS(tip_absence_check(build_atlas(4), 2), std::invalid_argument);
}
