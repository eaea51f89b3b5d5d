#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "butterfly/flux.hpp"
#include "butterfly/report.hpp"
#include "butterfly/spectrum.hpp"

namespace butterfly {

/// Hall conductance of one gap. For even q the closed central gap carries the
/// formal value +q/2 with `central_closed` set; it stands for the whole coset
/// {q/2 + l q}.
struct HallLabel {
  std::int64_t k = 0;
  bool central_closed = false;

  friend bool operator==(const HallLabel&, const HallLabel&) = default;
};

/// Solves p k = j (mod q) for the representative with |k| < q/2.
/// Throws std::invalid_argument if gcd(p, q) != 1 or j is outside [0, q].
HallLabel solve_label(std::int64_t p, std::int64_t q, std::int64_t j);

struct GapRecord {
  RationalFlux flux;
  std::int64_t j = 0;
  HallLabel label;
  Gap interval{};

  std::int64_t k() const { return label.k; }
  bool central_closed() const { return label.central_closed; }
  /// Integrated density of states inside the gap, j/q (unreduced).
  std::string rho() const { return std::to_string(j) + "/" + std::to_string(flux.q()); }
  /// Open gaps with a genuine label; excludes the closed central gap.
  bool open() const { return !label.central_closed && !interval.closed(); }
};

/// One record per gap j = 0..q, with the gap interval and its label.
std::vector<GapRecord> label_spectrum(const Spectrum& spectrum);

/// All labeled gaps for every reduced flux p/q with q <= q_max.
class PhaseAtlas {
 public:
  struct Entry {
    RationalFlux flux;
    std::vector<GapRecord> records;
  };
  struct RecordRef {
    std::size_t entry;
    std::size_t j;
  };

  PhaseAtlas(std::int64_t q_max, std::vector<Entry> entries);

  std::int64_t q_max() const { return q_max_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Records at a flux; nullptr if the flux is not in the atlas.
  const std::vector<GapRecord>* at(const RationalFlux& flux) const;

  /// All records carrying label k (central-closed records included).
  const std::vector<RecordRef>& with_label(std::int64_t k) const;
  const GapRecord& record(const RecordRef& ref) const { return entries_[ref.entry].records[ref.j]; }

 private:
  std::int64_t q_max_;
  std::vector<Entry> entries_;
  std::map<RationalFlux, std::size_t> by_flux_;
  std::map<std::int64_t, std::vector<RecordRef>> by_label_;
};

/// Largest q_max build_atlas accepts unless told otherwise.
inline constexpr std::int64_t kDefaultAtlasCap = 256;

/// Throws std::invalid_argument for q_max < 1 and std::length_error when
/// q_max exceeds `cap`.
PhaseAtlas build_atlas(std::int64_t q_max, std::int64_t cap = kDefaultAtlasCap);

/// All reduced fractions p/q in [0, 1] with q <= q_max, ordered by (q, p).
std::vector<RationalFlux> fluxes_up_to(std::int64_t q_max);

/// Checks k(mu, phi) = -k(mu, 1 - phi) = -k(-mu, phi) on every record, and
/// the matching mirror relations between gap intervals.
CheckReport label_symmetry_check(const PhaseAtlas& atlas);

}  // namespace butterfly
