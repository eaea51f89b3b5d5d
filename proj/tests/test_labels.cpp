#include <doctest.h>

#include <set>

#include "butterfly/labels.hpp"
#include "oracles.hpp"

using namespace butterfly;

namespace {
std::vector<std::int64_t> labels_of(const RationalFlux& f) {
  std::vector<std::int64_t> out;
  for (const auto& r : label_spectrum(compute_spectrum(f))) out.push_back(r.k());
  return out;
}
}  // namespace

TEST_CASE("solve_label examples") {
  CHECK(solve_label(1, 3, 1) == HallLabel{1, false});
  CHECK(solve_label(1, 3, 2) == HallLabel{-1, false});
  CHECK(solve_label(2, 5, 1) == HallLabel{-2, false});
  CHECK(solve_label(1, 2, 1) == HallLabel{1, true});
  CHECK(solve_label(3, 7, 0) == HallLabel{0, false});
  CHECK(solve_label(3, 7, 7) == HallLabel{0, false});
}

TEST_CASE("solve_label errors") {
  CHECK_THROWS_AS(solve_label(2, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_label(1, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(solve_label(1, 3, -1), std::invalid_argument);
}

TEST_CASE("solve_label agrees with brute force and the Diophantine relation") {
  for (const RationalFlux& f : fluxes_up_to(30)) {
    const std::int64_t p = f.p(), q = f.q();
    for (std::int64_t j = 0; j <= q; ++j) {
      const HallLabel l = solve_label(p, q, j);
      CHECK(floor_mod(p * l.k - j, q) == 0);
      CHECK((l.k == 0) == (j == 0 || j == q));
      if (l.central_closed) {
        CHECK(q % 2 == 0);
        CHECK(2 * j == q);
        CHECK(l.k == q / 2);
      } else {
        CHECK(2 * std::abs(l.k) < q);
        if (j != 0 && j != q) CHECK(oracle::brute_labels(p, q, j) == std::vector<std::int64_t>{l.k});
      }
      // phi k - rho is an integer: (p k - j)/q.
      CHECK((p * l.k - j) % q == 0);
    }
  }
}

TEST_CASE("label_spectrum examples") {
  CHECK(labels_of(RationalFlux(1, 3)) == std::vector<std::int64_t>{0, 1, -1, 0});
  CHECK(labels_of(RationalFlux(2, 5)) == std::vector<std::int64_t>{0, -2, 1, -1, 2, 0});

  const auto half = label_spectrum(compute_spectrum(RationalFlux(1, 2)));
  REQUIRE(half.size() == 3);
  CHECK(half[1].central_closed());
  CHECK(half[1].k() == 1);
  CHECK(half[1].interval.closed());
  CHECK_FALSE(half[1].open());
  CHECK(half[0].rho() == "0/2");
  CHECK(half[1].rho() == "1/2");
}

TEST_CASE("atlas examples") {
  const PhaseAtlas one = build_atlas(1);
  REQUIRE(one.entries().size() == 2);
  for (const auto& e : one.entries()) {
    REQUIRE(e.records.size() == 2);
    for (const auto& r : e.records) CHECK(r.k() == 0);
  }

  const PhaseAtlas two = build_atlas(2);
  const auto* half = two.at(RationalFlux(1, 2));
  REQUIRE(half != nullptr);
  CHECK((*half)[1].central_closed());
  CHECK(two.with_label(1).size() == 1);
  CHECK(two.with_label(7).empty());

  CHECK_THROWS_AS(build_atlas(0), std::invalid_argument);
  CHECK_THROWS_AS(build_atlas(300), std::length_error);
  CHECK_THROWS_AS(build_atlas(20, 10), std::length_error);
}

TEST_CASE("atlas completeness and uniqueness for q_max = 10") {
  const PhaseAtlas atlas = build_atlas(10);
  for (const auto& e : atlas.entries()) {
    const std::int64_t q = e.flux.q();
    REQUIRE(e.records.size() == static_cast<std::size_t>(q + 1));
    std::multiset<std::int64_t> nonzero;
    for (const auto& r : e.records) {
      if (r.k() != 0 && r.open()) nonzero.insert(r.k());
    }
    std::multiset<std::int64_t> expected;
    for (std::int64_t k = 1; 2 * k < q; ++k) {
      expected.insert(k);
      expected.insert(-k);
    }
    CHECK(nonzero == expected);
  }
}

TEST_CASE("label symmetry") {
  CHECK(label_symmetry_check(build_atlas(5)).pass);

  const auto fifth = label_spectrum(compute_spectrum(RationalFlux(1, 5)));
  const auto four_fifths = label_spectrum(compute_spectrum(RationalFlux(4, 5)));
  CHECK(fifth[1].k() == -four_fifths[1].k());

  const auto third = label_spectrum(compute_spectrum(RationalFlux(1, 3)));
  CHECK(third[1].k() == 1);
  CHECK(third[2].k() == -1);
}

TEST_CASE("label symmetry check reports a corrupted atlas") {
  const PhaseAtlas good = build_atlas(4);
  auto entries = good.entries();
  for (auto& e : entries) {
    if (e.flux == RationalFlux(1, 3)) e.records[1].label.k = 5;
  }
  const CheckReport r = label_symmetry_check(PhaseAtlas(4, entries));
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.counterexamples.empty());
}
