// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and printed alongside the measurements.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "butterfly/coexistence.hpp"
#include "butterfly/combinatorics.hpp"
#include "butterfly/dimension.hpp"
#include "butterfly/labels.hpp"
#include "butterfly/raster.hpp"
#include "butterfly/spectrum.hpp"
#include "butterfly/verify.hpp"
#include "oracles.hpp"
#include "render_checks.hpp"

using namespace butterfly;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", number, title, secs, o.detail.str().c_str());
  std::fflush(stdout);
}

double elapsed_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void band_structure(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t fluxes = 0;
  for (const RationalFlux& f : fluxes_up_to(40)) {
    ++fluxes;
    if (compute_spectrum(f).bands().size() != static_cast<std::size_t>(f.q())) o.require(false, "band count at " + f.str());
  }

  // Brute force: band i spans the range of the i-th Bloch eigenvalue over a
  // 200x200 grid of phases covering [0, 2 pi / q)^2.
  constexpr int kGrid = 200;
  const std::int64_t p = 1, q = 3;
  std::vector<double> lo(q, 1e300), hi(q, -1e300);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q) / kGrid;
  for (int a = 0; a < kGrid; ++a)
    for (int b = 0; b < kGrid; ++b) {
      const auto ev = oracle::bloch_eigenvalues(p, q, a * step, b * step);
      for (std::int64_t i = 0; i < q; ++i) {
        lo[i] = std::min(lo[i], ev[i]);
        hi[i] = std::max(hi[i], ev[i]);
      }
    }
  const Spectrum s = compute_spectrum(RationalFlux(p, q));
  double worst = 0.0;
  for (std::int64_t i = 0; i < q; ++i) {
    worst = std::max(worst, std::abs(s.bands()[i].lo - lo[i]));
    worst = std::max(worst, std::abs(s.bands()[i].hi - hi[i]));
  }
  const double secs = elapsed_since(start);
  o.detail << ": " << fluxes << " fluxes with q <= 40 have q bands; 1/3 edges vs 200x200 grid max err " << worst
           << " (tol 1e-6); " << secs << " s (limit 30 s)";
  o.require(worst <= 1e-6, "grid agreement");
  o.require(secs < 30.0, "runtime");
}

void central_gap(Outcome& o) {
  double widest = 0.0;
  for (std::int64_t q = 2; q <= 40; q += 2)
    for (std::int64_t p = 1; p < q; p += 2) {
      if (std::gcd(p, q) != 1) continue;
      const Spectrum s = compute_spectrum(RationalFlux(p, q), SpectrumMode::Direct);
      const double raw = s.bands()[q / 2].lo - s.bands()[q / 2 - 1].hi;
      widest = std::max(widest, std::abs(raw));
    }
  o.detail << ": max |central gap| over even q <= 40 (unsymmetrized spectra) = " << widest << " (tol 1e-9)";
  o.require(widest < 1e-9, "central gap width");
}

void labeling(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const PhaseAtlas atlas = build_atlas(40);
  std::size_t fluxes = 0;
  for (const auto& entry : atlas.entries()) {
    const std::int64_t q = entry.flux.q();
    if (q < 2) continue;
    ++fluxes;
    std::multiset<std::int64_t> seen;
    for (const GapRecord& r : entry.records)
      if (r.j != 0 && r.j != q && !r.central_closed()) seen.insert(r.k());
    std::multiset<std::int64_t> expect;
    for (std::int64_t k = -(q - 1) / 2; k <= (q - 1) / 2; ++k)
      if (k != 0 && 2 * std::abs(k) < q) expect.insert(k);
    if (seen != expect) o.require(false, "label set at " + entry.flux.str());
    for (const GapRecord& r : entry.records)
      if ((entry.flux.p() * r.k() - r.j) % q != 0) o.require(false, "Diophantine relation at " + entry.flux.str());
  }
  const double secs = elapsed_since(start);
  o.detail << ": " << fluxes << " fluxes, nonzero labels = {0<|k|<q/2} each once; " << secs << " s (limit 5 s)";
  o.require(secs < 5.0, "runtime");
}

void symmetry(Outcome& o) {
  SuiteOptions opts;
  opts.q_max = 40;
  const SuiteResult r = run_symmetry_suite(opts);
  o.detail << ": q <= 40;";
  for (const auto& line : r.lines) o.detail << " " << line << ";";
  o.require(r.pass, "symmetry suite");
}

void component_counts(Outcome& o) {
  const std::int64_t c0 = component_count(0).count, c1 = component_count(1).count;
  const std::int64_t c2 = component_count(2).count, c3 = component_count(3).count;
  o.detail << ": |P(0)|=" << c0 << " |P(1)|=" << c1 << " |P(2)|=" << c2 << " |P(3)|=" << c3;
  o.require(c0 == 2 && c1 == 2 && c2 == 6 && c3 == 12, "counts");
  const PhaseAtlas atlas = build_atlas(13);
  for (std::int64_t k = -5; k <= 5; ++k) {
    if (k == 0) continue;
    const CheckReport r = tip_absence_check(atlas, k);
    if (!r.pass) o.require(false, "tip absence for k=" + std::to_string(k));
  }
  o.detail << "; tip absence holds for 1 <= |k| <= 5 (atlas q <= 13)";
}

void totient_asymptotic(Outcome& o) {
  // The O(k log k) remainder oscillates, so the trend is judged end to end.
  const double r20 = asymptotic_ratio(20), r200 = asymptotic_ratio(200);
  o.detail << ": ratio(20)=" << r20 << " ratio(200)=" << r200 << " (tol 3%), |ratio-1| shrinks from k=20 to k=200";
  o.require(std::abs(r200 - 1.0) <= 0.03, "ratio at 200");
  o.require(std::abs(r200 - 1.0) < std::abs(r20 - 1.0), "trend");
}

void bounds(Outcome& o) {
  double worst_bw = 0.0;
  std::string at;
  for (const RationalFlux& f : fluxes_up_to(60)) {
    if (f.q() < 2) continue;
    const double ratio = total_bandwidth(compute_spectrum(f)) * static_cast<double>(f.q()) / 24.0;
    if (ratio > worst_bw) worst_bw = ratio, at = f.str();
  }
  double worst_h = 0.0;
  for (const auto& [a, b] : random_flux_pairs(100, 40, 0.05, 0)) {
    const double d = spectral_hausdorff_distance(compute_spectrum(a), compute_spectrum(b));
    worst_h = std::max(worst_h, d / (18.0 * std::sqrt(std::abs(a.value() - b.value()))));
  }
  o.detail << ": max W*q/24 = " << worst_bw << " at " << at << "; max Hausdorff/(18 sqrt|dphi|) = " << worst_h
           << " over 100 pairs (seed 0)";
  o.require(worst_bw <= 1.0, "bandwidth bound");
  o.require(worst_h <= 1.0, "Holder bound");
}

void proposition(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  struct Case {
    std::int64_t k;
    RationalFlux flux;
    std::vector<std::int64_t> others;
  };
  const std::vector<Case> cases{{0, RationalFlux(1, 2), {1, -1, 3}}, {1, RationalFlux(1, 3), {0, 2, -1}}};
  std::size_t entries = 0, skipped = 0;
  for (const Case& c : cases) {
    for (BoundarySide side : {BoundarySide::Right, BoundarySide::Left}) {
      const CoexistenceReport r = verify_proposition(c.k, c.flux, side, 12, 2);
      for (const auto& e : r.entries) (e.skipped ? skipped : entries) += 1;
      const std::string tag = "k=" + std::to_string(c.k) + " at " + c.flux.str() +
                              (side == BoundarySide::Right ? " right" : " left");
      o.require(r.monotone, "monotone " + tag);
      o.require(r.pass, "bound " + tag);
    }
    for (std::int64_t kp : c.others) {
      const NonCoexistenceReport n = non_coexistence_check(c.k, kp, c.flux, 12);
      o.detail << " min dist P(" << c.k << ")->P(" << kp << ") at " << c.flux.str() << " = " << n.min_dist << ";";
      o.require(n.pass, "non-coexistence k'=" + std::to_string(kp));
    }
  }
  const double secs = elapsed_since(start);
  o.detail << " " << entries << " (n,l) distances within the assembled bound and decreasing, " << skipped
           << " skipped (gap absent at small q_n); " << secs << " s (limit 60 s)";
  o.require(secs < 60.0, "runtime");
}

void wada(Outcome& o) {
  const WadaDisc d = seeded_wada_disc(0);
  const auto coarse = wada_probe(d.center, d.radius, 10);
  const auto fine = wada_probe(d.center, d.radius, 40);
  o.detail << ": disc at (" << d.center.phi << ", " << d.center.energy << ") r=" << d.radius << ": " << coarse.size()
           << " labels at q_max=10, " << fine.size() << " at q_max=40";
  o.require(fine.size() > coarse.size(), "label growth");
}

void render_structure(Outcome& o) {
  RenderConfig c;
  c.width = c.height = 512;
  c.q_cap = 30;
  const Render a = render(c);
  const Render b = render(c);
  const bool same = encode_ppm(a.image) == encode_ppm(b.image);
  const auto s = render_checks::check_antisymmetry(a);
  const std::int64_t lower_left = render_checks::dominant(render_checks::edge_runs(a, 0, 256, true));
  o.detail << ": bitwise identical=" << (same ? "yes" : "no") << ", mirror antisymmetry over " << s.mirror_pairs
           << " column pairs=" << (s.mirror ? "yes" : "no") << ", vertical=" << (s.vertical ? "yes" : "no")
           << ", dominant label above the lower-left edge k=" << lower_left;
  o.require(same, "determinism");
  o.require(s.mirror && s.vertical, "antisymmetry");
  o.require(lower_left == 1, "lower-left wing");
}

void dimension(Outcome& o) {
  std::vector<Mask> lines, squares;
  for (int n : {256, 512, 1024}) {
    lines.push_back(diagonal_line_mask(n));
    squares.push_back(filled_square_mask(n));
  }
  const double line = box_counting_slope(lines), square = box_counting_slope(squares);
  o.detail << ": calibration line " << line << " (1 +- 0.05), square " << square << " (2 +- 0.1)";
  o.require(std::abs(line - 1.0) <= 0.05 && std::abs(square - 2.0) <= 0.1, "calibration");
  if (!o.pass) return;
  const std::vector<int> ladder{256, 512, 1024};
  const DimensionEstimate d = boundary_dimension_estimate(1, ladder);
  o.detail << "; boundary of P(1) slope " << d.slope << " (range [0.85, 1.15]), counts";
  for (auto n : d.counts) o.detail << " " << n;
  o.require(d.slope >= 0.85 && d.slope <= 1.15, "slope");
}

}  // namespace

int main() {
  criterion(1, "band structure", band_structure);
  criterion(2, "even-q central gap closed", central_gap);
  criterion(3, "gap labeling complete and unique", labeling);
  criterion(4, "energy and flux antisymmetry", symmetry);
  criterion(5, "component counts and tip absence", component_counts);
  criterion(6, "totient asymptotic", totient_asymptotic);
  criterion(7, "bandwidth and Holder bounds", bounds);
  criterion(8, "coexistence along approximants", proposition);
  criterion(9, "Wada probe", wada);
  criterion(10, "render determinism and structure", render_structure);
  criterion(11, "boundary dimension", dimension);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
