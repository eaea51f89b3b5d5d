#include "butterfly/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "butterfly/combinatorics.hpp"
#include "butterfly/dimension.hpp"
#include "butterfly/labels.hpp"
#include "butterfly/spectrum.hpp"

namespace butterfly {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool bands_close(const Spectrum& a, const Spectrum& b, bool negate, double tol) {
  const auto& x = a.bands();
  const auto& y = b.bands();
  if (x.size() != y.size()) return false;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Band other = negate ? Band{-y[n - 1 - i].hi, -y[n - 1 - i].lo} : y[i];
    if (std::abs(x[i].lo - other.lo) > tol || std::abs(x[i].hi - other.hi) > tol) return false;
  }
  return true;
}

}  // namespace

std::vector<std::pair<RationalFlux, RationalFlux>> random_flux_pairs(std::size_t count, std::int64_t q_limit,
                                                                     double max_delta, std::uint64_t seed) {
  const std::vector<RationalFlux> pool = fluxes_up_to(q_limit);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<RationalFlux, RationalFlux>> out;
  while (out.size() < count) {
    const RationalFlux a = pool[pick(rng, pool.size())];
    std::vector<RationalFlux> near;
    for (const RationalFlux& f : pool) {
      if (!(f == a) && std::abs(f.value() - a.value()) <= max_delta) near.push_back(f);
    }
    if (near.empty()) continue;
    out.emplace_back(a, near[pick(rng, near.size())]);
  }
  return out;
}

WadaDisc seeded_wada_disc(std::uint64_t seed) {
  std::vector<RationalFlux> pool;
  for (const RationalFlux& f : fluxes_up_to(10)) {
    if (f.q() >= 3) pool.push_back(f);
  }
  std::mt19937_64 rng(seed);
  const RationalFlux flux = pool[pick(rng, pool.size())];
  const auto records = label_spectrum(compute_spectrum(flux));
  std::vector<const GapRecord*> internal;
  for (const GapRecord& r : records) {
    if (r.open() && r.k() != 0) internal.push_back(&r);
  }
  const GapRecord& gap = *internal[pick(rng, internal.size())];
  return {{flux.value(), gap.interval.hi}, 0.01 + 0.02 * unit_interval(rng)};
}

SuiteResult run_symmetry_suite(const SuiteOptions& options) {
  const std::int64_t q_max = options.q_max > 0 ? options.q_max : 20;
  SuiteResult result{"symmetry", true, {}};
  const PhaseAtlas atlas = build_atlas(q_max);
  const CheckReport labels = label_symmetry_check(atlas);
  result.check(labels.pass, "label antisymmetry k(mu,phi) = -k(mu,1-phi) = -k(-mu,phi) for q <= " + std::to_string(q_max));
  for (std::size_t i = 0; i < labels.counterexamples.size() && i < 10; ++i) result.lines.push_back("  " + labels.counterexamples[i]);

  std::size_t e_bad = 0, phi_bad = 0;
  for (const RationalFlux& f : fluxes_up_to(q_max)) {
    const Spectrum s = compute_spectrum(f, SpectrumMode::Direct);
    if (!bands_close(s, s, true, 1e-9)) ++e_bad;
    if (!bands_close(s, compute_spectrum(f.mirror(), SpectrumMode::Direct), false, 1e-9)) ++phi_bad;
  }
  result.check(e_bad == 0, "spectrum symmetric under E -> -E within 1e-9 (" + std::to_string(e_bad) + " failures)");
  result.check(phi_bad == 0, "spectrum identical at phi and 1-phi within 1e-9 (" + std::to_string(phi_bad) + " failures)");
  return result;
}

SuiteResult run_bounds_suite(const SuiteOptions& options) {
  const std::int64_t q_max = options.q_max > 0 ? options.q_max : 60;
  SuiteResult result{"bounds", true, {}};

  double worst = 0.0;
  std::string worst_at;
  for (const RationalFlux& f : fluxes_up_to(q_max)) {
    if (f.q() < 2) continue;
    const double ratio = total_bandwidth(compute_spectrum(f)) * static_cast<double>(f.q()) / 24.0;
    if (ratio > worst) worst = ratio, worst_at = f.str();
  }
  result.check(worst <= 1.0, "total bandwidth <= 24/q for 2 <= q <= " + std::to_string(q_max) + " (max ratio " +
                                 num(worst) + " at " + worst_at + ")");

  const std::int64_t q_limit = std::min<std::int64_t>(q_max, 40);
  double worst_holder = 0.0;
  for (const auto& [a, b] : random_flux_pairs(100, q_limit, 0.05, options.seed)) {
    const double d = spectral_hausdorff_distance(compute_spectrum(a), compute_spectrum(b));
    worst_holder = std::max(worst_holder, d / (18.0 * std::sqrt(std::abs(a.value() - b.value()))));
  }
  result.check(worst_holder <= 1.0, "Hausdorff spectral distance <= 18 sqrt|dphi| on 100 seeded pairs (max ratio " +
                                        num(worst_holder) + ")");
  return result;
}

SuiteResult run_proposition_suite(const SuiteOptions& options) {
  SuiteResult result{"proposition", true, {}};
  struct Case {
    std::int64_t k;
    RationalFlux flux;
    std::vector<std::int64_t> others;
  };
  const Case cases[] = {{0, RationalFlux(1, 2), {1, -1, 3}}, {1, RationalFlux(1, 3), {0, 2, -1}}};
  for (const Case& c : cases) {
    for (BoundarySide side : {BoundarySide::Right, BoundarySide::Left}) {
      const CoexistenceReport r = verify_proposition(c.k, c.flux, side, options.n_max, options.max_l);
      std::size_t checked = 0;
      for (const auto& e : r.entries) checked += e.skipped ? 0 : 1;
      result.check(r.pass, "k=" + std::to_string(c.k) + " at " + c.flux.str() +
                               (side == BoundarySide::Right ? " right" : " left") + ": " + std::to_string(checked) +
                               " approximant distances within bound, monotone=" + (r.monotone ? "yes" : "no"));
    }
    for (std::int64_t kp : c.others) {
      const NonCoexistenceReport r = non_coexistence_check(c.k, kp, c.flux, options.n_max);
      result.check(r.pass, "k=" + std::to_string(c.k) + " vs k'=" + std::to_string(kp) + " at " + c.flux.str() +
                               ": min distance " + num(r.min_dist) + " > " + num(r.floor));
    }
  }
  return result;
}

SuiteResult run_wada_suite(const SuiteOptions& options) {
  const std::int64_t q_max = options.q_max > 0 ? options.q_max : 40;
  SuiteResult result{"wada", true, {}};
  const WadaDisc disc = seeded_wada_disc(options.seed);
  const auto coarse = wada_probe(disc.center, disc.radius, 10);
  const auto fine = wada_probe(disc.center, disc.radius, q_max);
  result.check(fine.size() > coarse.size(), "disc at (" + num(disc.center.phi) + ", " + num(disc.center.energy) +
                                                ") r=" + num(disc.radius) + ": " + std::to_string(coarse.size()) +
                                                " labels at q<=10, " + std::to_string(fine.size()) + " at q<=" +
                                                std::to_string(q_max));
  return result;
}

SuiteResult run_dimension_suite(const SuiteOptions& options) {
  (void)options;
  SuiteResult result{"dimension", true, {}};
  const int sizes[] = {256, 512, 1024};
  std::vector<Mask> lines, squares;
  for (int n : sizes) {
    lines.push_back(diagonal_line_mask(n));
    squares.push_back(filled_square_mask(n));
  }
  const double line = box_counting_slope(lines);
  const double square = box_counting_slope(squares);
  result.check(std::abs(line - 1.0) <= 0.05, "calibration line slope " + num(line));
  result.check(std::abs(square - 2.0) <= 0.1, "calibration square slope " + num(square));
  const DimensionEstimate est = boundary_dimension_estimate(1, sizes);
  result.check(est.slope >= 0.85 && est.slope <= 1.15, "boundary of P(1) box-counting slope " + num(est.slope));
  return result;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "symmetry") return run_symmetry_suite(options);
  if (name == "bounds") return run_bounds_suite(options);
  if (name == "proposition") return run_proposition_suite(options);
  if (name == "wada") return run_wada_suite(options);
  if (name == "dimension") return run_dimension_suite(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace butterfly
