#include "butterfly/coexistence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "butterfly/parallel.hpp"

namespace butterfly {

RationalFlux Approximant::periodic_flux() const {
  const std::int64_t q = denominator();
  const std::int64_t p = q_n < 0 ? -p_n : p_n;
  return RationalFlux(floor_mod(p, q), q);
}

ApproximantSequence bezout_approximants(RationalFlux flux, std::int64_t n_first, std::int64_t n_last) {
  const std::int64_t p = flux.p();
  const std::int64_t q = flux.q();
  // extended_gcd gives p x + q y = 1, so a = x, b = -y; shift a into [0, q).
  const auto [g, x, y] = extended_gcd(p, q);
  if (g != 1) throw std::invalid_argument("flux is not reduced");
  const std::int64_t a = floor_mod(x, q);
  const std::int64_t b = -y + (a - x) / q * p;

  ApproximantSequence seq{flux, a, b, {}};
  for (std::int64_t n = n_first; n <= n_last; ++n) {
    const std::int64_t q_n = n * q - a;
    if (q_n == 0) continue;
    seq.terms.push_back({n, n * p - b, q_n});
  }
  return seq;
}

std::set<std::int64_t> coexisting_labels(std::int64_t k, RationalFlux flux, std::int64_t max_l) {
  const std::int64_t q = flux.q();
  if (2 * std::abs(k) > q) {
    throw std::invalid_argument("k=" + std::to_string(k) + " is not a gap label at flux " + flux.str());
  }
  std::set<std::int64_t> out;
  for (std::int64_t l = -max_l; l <= max_l; ++l) out.insert(k + l * q);
  return out;
}

namespace {

const GapRecord& record_for_label(const std::vector<GapRecord>& records, std::int64_t k, const RationalFlux& flux) {
  const std::int64_t q = flux.q();
  for (const GapRecord& r : records) {
    if (r.k() == k) return r;
    // -q/2 names the same closed central gap as +q/2.
    if (r.central_closed() && -r.k() == k) return r;
  }
  throw std::invalid_argument("k=" + std::to_string(k) + " labels no gap at flux " + flux.str() + " (q=" +
                              std::to_string(q) + ")");
}

}  // namespace

PlanePoint boundary_point(std::int64_t k, RationalFlux flux, BoundarySide side) {
  const Spectrum spectrum = compute_spectrum(flux);
  if (k == 0) return {flux.value(), side == BoundarySide::Right ? spectrum.min() : spectrum.max()};
  const auto records = label_spectrum(spectrum);
  const GapRecord& r = record_for_label(records, k, flux);
  return {flux.value(), side == BoundarySide::Right ? r.interval.hi : r.interval.lo};
}

double distance_to_gap(const PlanePoint& point, double phi, const Gap& gap) {
  double de = 0.0;
  if (point.energy < gap.lo) {
    de = gap.lo - point.energy;
  } else if (point.energy > gap.hi) {
    de = point.energy - gap.hi;
  }
  return std::hypot(point.phi - phi, de);
}

std::optional<GapRecord> find_label(const std::vector<GapRecord>& records, std::int64_t label) {
  for (const GapRecord& r : records) {
    if (r.k() == label && r.open()) return r;
  }
  return std::nullopt;
}

double assembled_bound(std::int64_t l, std::int64_t q, std::int64_t q_n, double phi_offset) {
  const double al = static_cast<double>(std::abs(l));
  const double qn = static_cast<double>(std::abs(q_n));
  return 24.0 * al / qn + 18.0 * (al - 1.0) / std::sqrt(static_cast<double>(q) * qn) + phi_offset;
}

namespace {

// Labeled gaps at each approximant flux, computed once per distinct flux.
std::map<RationalFlux, std::vector<GapRecord>> label_approximants(const std::vector<Approximant>& terms) {
  std::map<RationalFlux, std::vector<GapRecord>> out;
  for (const auto& t : terms) out.emplace(t.periodic_flux(), std::vector<GapRecord>{});
  std::vector<decltype(out)::iterator> slots;
  for (auto it = out.begin(); it != out.end(); ++it) slots.push_back(it);
  parallel_for(slots.size(), [&](std::size_t i) { slots[i]->second = label_spectrum(compute_spectrum(slots[i]->first)); });
  return out;
}

}  // namespace

CoexistenceReport verify_proposition(std::int64_t k, RationalFlux flux, BoundarySide side, std::int64_t n_max,
                                     std::int64_t max_l) {
  if (n_max < 1 || max_l < 1) throw std::invalid_argument("n_max and max_l must be >= 1");
  CoexistenceReport report;
  report.k = k;
  report.flux = flux;
  report.side = side;
  report.n_max = n_max;
  report.max_l = max_l;
  report.point = boundary_point(k, flux, side);

  const ApproximantSequence seq = bezout_approximants(flux, -n_max, n_max);
  const auto labeled = label_approximants(seq.terms);
  const std::int64_t q = flux.q();

  for (const Approximant& term : seq.terms) {
    if (term.n == 0) continue;
    for (std::int64_t l = -max_l; l <= max_l; ++l) {
      if (l == 0) continue;
      // Right boundary: n -> +inf reaches k + l q for l > 0; left swaps.
      const bool positive_n = (l > 0) == (side == BoundarySide::Right);
      if ((term.n > 0) != positive_n) continue;

      CoexistenceEntry e{term.n, l, term.p_n, term.q_n, k + l * q};
      const auto target = find_label(labeled.at(term.periodic_flux()), e.label);
      if (!target) {
        e.skipped = true;
      } else {
        const double offset = std::abs(report.point.phi - term.value());
        e.dist = distance_to_gap(report.point, term.value(), target->interval);
        e.bound = assembled_bound(l, q, term.q_n, offset);
        e.pass = e.dist <= e.bound;
      }
      report.entries.push_back(e);
    }
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const CoexistenceEntry& x, const CoexistenceEntry& y) { return std::tie(x.n, x.l) < std::tie(y.n, y.l); });

  for (std::int64_t l = -max_l; l <= max_l; ++l) {
    std::vector<const CoexistenceEntry*> run;
    for (const auto& e : report.entries) {
      if (e.l == l && !e.skipped && std::abs(e.n) > 3) run.push_back(&e);
    }
    std::sort(run.begin(), run.end(), [](auto* x, auto* y) { return std::abs(x->n) < std::abs(y->n); });
    for (std::size_t i = 1; i < run.size(); ++i) {
      if (!(run[i]->dist < run[i - 1]->dist)) report.monotone = false;
    }
  }
  report.pass = report.monotone && std::all_of(report.entries.begin(), report.entries.end(),
                                               [](const CoexistenceEntry& e) { return e.skipped || e.pass; });
  return report;
}

NonCoexistenceReport non_coexistence_check(std::int64_t k, std::int64_t kprime, RationalFlux flux, std::int64_t n_max) {
  const std::int64_t q = flux.q();
  if ((kprime - k) % q == 0) {
    throw std::invalid_argument("k'=" + std::to_string(kprime) + " is in the coexisting coset of k=" +
                                std::to_string(k) + " at q=" + std::to_string(q));
  }
  NonCoexistenceReport report;
  report.k = k;
  report.kprime = kprime;
  report.flux = flux;
  report.min_dist = std::numeric_limits<double>::infinity();
  report.min_energy_dist = std::numeric_limits<double>::infinity();

  const PlanePoint points[] = {boundary_point(k, flux, BoundarySide::Right), boundary_point(k, flux, BoundarySide::Left)};
  const ApproximantSequence seq = bezout_approximants(flux, -n_max, n_max);
  const auto labeled = label_approximants(seq.terms);
  for (const Approximant& term : seq.terms) {
    if (term.n == 0) continue;
    const auto& records = labeled.at(term.periodic_flux());
    for (const GapRecord& r : records) {
      if (r.k() != kprime || !r.open()) continue;
      for (const PlanePoint& x : points) {
        ++report.samples;
        report.min_dist = std::min(report.min_dist, distance_to_gap(x, term.value(), r.interval));
        report.min_energy_dist = std::min(report.min_energy_dist, distance_to_gap(x, x.phi, r.interval));
      }
    }
  }
  report.pass = report.min_dist > report.floor;
  return report;
}

std::set<std::int64_t> wada_probe(const PlanePoint& center, double radius, std::int64_t q_max) {
  if (!(radius > 0.0)) throw std::invalid_argument("probe radius must be positive");
  std::vector<RationalFlux> inside;
  for (const RationalFlux& f : fluxes_up_to(q_max)) {
    if (std::abs(f.value() - center.phi) <= radius) inside.push_back(f);
  }
  std::vector<std::vector<std::int64_t>> found(inside.size());
  parallel_for(inside.size(), [&](std::size_t i) {
    const double dphi = inside[i].value() - center.phi;
    const double half = std::sqrt(std::max(0.0, radius * radius - dphi * dphi));
    for (const GapRecord& r : label_spectrum(compute_spectrum(inside[i]))) {
      if (r.open() && r.interval.lo < center.energy + half && r.interval.hi > center.energy - half) {
        found[i].push_back(r.k());
      }
    }
  });
  std::set<std::int64_t> labels;
  for (const auto& ks : found) labels.insert(ks.begin(), ks.end());
  return labels;
}

namespace {

double distance_to_set(double x, const std::vector<Band>& bands) {
  double best = std::numeric_limits<double>::infinity();
  for (const Band& b : bands) {
    if (b.contains(x)) return 0.0;
    best = std::min(best, x < b.lo ? b.lo - x : x - b.hi);
  }
  return best;
}

// sup over a of dist(x, b). The distance to b is piecewise linear, so the
// supremum sits at an endpoint of a or at the midpoint of a gap of b.
double directed_hausdorff(const std::vector<Band>& a, const std::vector<Band>& b) {
  std::vector<double> candidates;
  for (const Band& band : a) {
    candidates.push_back(band.lo);
    candidates.push_back(band.hi);
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const double mid = 0.5 * (b[i].hi + b[i + 1].lo);
    for (const Band& band : a) {
      if (band.contains(mid)) candidates.push_back(mid);
    }
  }
  double sup = 0.0;
  for (double x : candidates) sup = std::max(sup, distance_to_set(x, b));
  return sup;
}

}  // namespace

double spectral_hausdorff_distance(const Spectrum& a, const Spectrum& b) {
  return std::max(directed_hausdorff(a.bands(), b.bands()), directed_hausdorff(b.bands(), a.bands()));
}

}  // namespace butterfly
