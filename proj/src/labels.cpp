#include "butterfly/labels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "butterfly/parallel.hpp"

namespace butterfly {

HallLabel solve_label(std::int64_t p, std::int64_t q, std::int64_t j) {
  if (q <= 0 || p < 0 || std::gcd(p, q) != 1) {
    throw std::invalid_argument("flux " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
  }
  if (j < 0 || j > q) throw std::invalid_argument("gap index out of range [0, q]");
  if (j == 0 || j == q) return {0, false};
  if (q % 2 == 0 && 2 * j == q) return {q / 2, true};
  const std::int64_t r = floor_mod(j * mod_inverse(p, q), q);
  return {2 * r < q ? r : r - q, false};
}

std::vector<GapRecord> label_spectrum(const Spectrum& spectrum) {
  const RationalFlux& flux = spectrum.flux();
  std::vector<GapRecord> out;
  out.reserve(static_cast<std::size_t>(flux.q()) + 1);
  for (std::int64_t j = 0; j <= flux.q(); ++j) {
    out.push_back({flux, j, solve_label(flux.p(), flux.q(), j), spectrum.gap(static_cast<std::size_t>(j))});
  }
  return out;
}

PhaseAtlas::PhaseAtlas(std::int64_t q_max, std::vector<Entry> entries)
    : q_max_(q_max), entries_(std::move(entries)) {
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    by_flux_.emplace(entries_[e].flux, e);
    const auto& records = entries_[e].records;
    for (std::size_t j = 0; j < records.size(); ++j) by_label_[records[j].k()].push_back({e, j});
  }
}

const std::vector<GapRecord>* PhaseAtlas::at(const RationalFlux& flux) const {
  const auto it = by_flux_.find(flux);
  return it == by_flux_.end() ? nullptr : &entries_[it->second].records;
}

const std::vector<PhaseAtlas::RecordRef>& PhaseAtlas::with_label(std::int64_t k) const {
  static const std::vector<RecordRef> kNone;
  const auto it = by_label_.find(k);
  return it == by_label_.end() ? kNone : it->second;
}

std::vector<RationalFlux> fluxes_up_to(std::int64_t q_max) {
  std::vector<RationalFlux> out;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

PhaseAtlas build_atlas(std::int64_t q_max, std::int64_t cap) {
  if (q_max < 1) throw std::invalid_argument("atlas needs q_max >= 1");
  if (q_max > cap) {
    throw std::length_error("q_max " + std::to_string(q_max) + " exceeds the atlas cap " + std::to_string(cap));
  }
  const std::vector<RationalFlux> fluxes = fluxes_up_to(q_max);
  std::vector<PhaseAtlas::Entry> entries(fluxes.size());
  parallel_for(fluxes.size(), [&](std::size_t i) {
    entries[i] = {fluxes[i], label_spectrum(compute_spectrum(fluxes[i]))};
  });
  return PhaseAtlas(q_max, std::move(entries));
}

namespace {

bool same_label(const HallLabel& a, const HallLabel& negated_b) {
  // The central coset {q/2 + l q} is closed under negation.
  if (a.central_closed || negated_b.central_closed) return a.central_closed && negated_b.central_closed;
  return a.k == -negated_b.k;
}

bool same_interval(const Gap& a, const Gap& b, double tol) {
  auto close = [tol](double x, double y) { return x == y || std::abs(x - y) <= tol; };
  return close(a.lo, b.lo) && close(a.hi, b.hi);
}

}  // namespace

CheckReport label_symmetry_check(const PhaseAtlas& atlas) {
  constexpr double kTol = 1e-9;
  CheckReport report;
  for (const auto& entry : atlas.entries()) {
    const auto& records = entry.records;
    const auto q = static_cast<std::size_t>(entry.flux.q());
    const auto* mirrored = atlas.at(entry.flux.mirror());
    if (mirrored == nullptr) {
      report.fail("missing mirror flux of " + entry.flux.str());
      continue;
    }
    for (std::size_t j = 0; j <= q; ++j) {
      const GapRecord& r = records[j];
      const GapRecord& time_reversed = (*mirrored)[j];
      const GapRecord& particle_hole = records[q - j];
      if (!same_label(r.label, time_reversed.label)) {
        report.fail(entry.flux.str() + " gap " + std::to_string(j) + ": k=" + std::to_string(r.k()) +
                    " but mirror flux has k=" + std::to_string(time_reversed.k()));
      }
      if (!same_label(r.label, particle_hole.label)) {
        report.fail(entry.flux.str() + " gap " + std::to_string(j) + ": k=" + std::to_string(r.k()) +
                    " but gap " + std::to_string(q - j) + " has k=" + std::to_string(particle_hole.k()));
      }
      if (!same_interval(r.interval, time_reversed.interval, kTol)) {
        report.fail(entry.flux.str() + " gap " + std::to_string(j) + ": interval differs at mirror flux");
      }
      if (!same_interval(r.interval, {-particle_hole.interval.hi, -particle_hole.interval.lo}, kTol)) {
        report.fail(entry.flux.str() + " gap " + std::to_string(j) + ": interval not mirrored under E -> -E");
      }
    }
  }
  return report;
}

}  // namespace butterfly
