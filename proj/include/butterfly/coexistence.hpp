#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "butterfly/flux.hpp"
#include "butterfly/labels.hpp"
#include "butterfly/spectrum.hpp"

namespace butterfly {

/// One Bezout approximant p_n/q_n = (n p - b)/(n q - a). The raw pair keeps
/// the sign the formula produces, so p_n q - q_n p = 1 holds for every n; for
/// negative n both entries are negative.
struct Approximant {
  std::int64_t n = 0;
  std::int64_t p_n = 0;
  std::int64_t q_n = 0;

  /// Denominator of the fraction in lowest terms with positive sign.
  std::int64_t denominator() const { return q_n < 0 ? -q_n : q_n; }
  /// Flux value p_n/q_n. May fall outside [0, 1] next to the endpoints.
  double value() const { return static_cast<double>(p_n) / static_cast<double>(q_n); }
  /// The flux in [0, 1) with the same spectrum and labels (flux is periodic
  /// with period 1).
  RationalFlux periodic_flux() const;
};

struct ApproximantSequence {
  RationalFlux base;
  std::int64_t a = 0;  // canonical: 0 <= a < q
  std::int64_t b = 0;  // p a - q b = 1
  std::vector<Approximant> terms;
};

/// Terms for n in [n_first, n_last]; n with q_n = 0 is skipped.
ApproximantSequence bezout_approximants(RationalFlux flux, std::int64_t n_first, std::int64_t n_last);

/// {k + l q : |l| <= max_l}. Throws std::invalid_argument when k is not a
/// label at p/q (|k| > q/2).
std::set<std::int64_t> coexisting_labels(std::int64_t k, RationalFlux flux, std::int64_t max_l);

enum class BoundarySide { Left, Right };

struct PlanePoint {
  double phi = 0.0;
  double energy = 0.0;
};

/// The boundary point of P(k) at flux p/q: the upper (Right) or lower (Left)
/// end of the gap labeled k. For k = 0, Right is the bottom of the spectrum
/// and Left is its top. Throws std::invalid_argument if k has no gap at p/q.
PlanePoint boundary_point(std::int64_t k, RationalFlux flux, BoundarySide side);

/// Distance in the (phi, E) plane from `point` to the closed gap segment
/// drawn at flux value `phi`.
double distance_to_gap(const PlanePoint& point, double phi, const Gap& gap);

/// The open gap labeled `label` at an approximant, if any.
std::optional<GapRecord> find_label(const std::vector<GapRecord>& records, std::int64_t label);

struct CoexistenceEntry {
  std::int64_t n = 0;
  std::int64_t l = 0;
  std::int64_t p_n = 0;
  std::int64_t q_n = 0;
  std::int64_t label = 0;
  bool skipped = false;  // target gap closed or not representable at q_n
  double dist = 0.0;
  double bound = 0.0;
  bool pass = true;
};

struct CoexistenceReport {
  PlanePoint point;
  std::int64_t k = 0;
  RationalFlux flux;
  BoundarySide side = BoundarySide::Right;
  std::int64_t n_max = 0;
  std::int64_t max_l = 0;
  std::vector<CoexistenceEntry> entries;  // sorted by (n, l)
  /// Per l, distances strictly decrease in |n| once |n| > 3.
  bool monotone = true;
  bool pass = true;
};

/// Assembled distance bound for the gap l steps away at denominator q_n.
double assembled_bound(std::int64_t l, std::int64_t q, std::int64_t q_n, double phi_offset);

/// Follows the gaps labeled k + l q along the Bezout approximants towards the
/// boundary point of P(k) and checks each distance against the assembled
/// bound. On the right side, n > 0 reaches l > 0; on the left side the signs
/// swap.
CoexistenceReport verify_proposition(std::int64_t k, RationalFlux flux, BoundarySide side, std::int64_t n_max = 12,
                                     std::int64_t max_l = 3);

struct NonCoexistenceReport {
  std::int64_t k = 0;
  std::int64_t kprime = 0;
  RationalFlux flux;
  double floor = 1e-3;
  double min_dist = 0.0;         // Euclidean, over both boundary points
  double min_energy_dist = 0.0;  // energy component only
  std::size_t samples = 0;
  bool pass = true;
};

/// Distances from both boundary points of P(k) at p/q to P(k') along the
/// approximants |n| <= n_max stay above `floor`. Throws std::invalid_argument
/// when q divides k' - k (that pair coexists).
NonCoexistenceReport non_coexistence_check(std::int64_t k, std::int64_t kprime, RationalFlux flux,
                                           std::int64_t n_max = 12);

/// Labels of every open gap with q <= q_max that meets the closed disc.
std::set<std::int64_t> wada_probe(const PlanePoint& center, double radius, std::int64_t q_max);

/// Hausdorff distance between the spectra as subsets of the real line.
double spectral_hausdorff_distance(const Spectrum& a, const Spectrum& b);

}  // namespace butterfly
