#pragma once

#include <complex>
#include <vector>

#include "butterfly/eigen.hpp"
#include "butterfly/flux.hpp"

namespace butterfly {

/// Gaps narrower than this are reported closed, with zero width.
inline constexpr double kClosedGapTolerance = 1e-9;

/// Magnetic Bloch Hamiltonian of the self-dual Hofstadter model at flux p/q:
/// a q x q Hermitian matrix with
///   H(n, n)     = 2 cos(2 pi n p/q + theta2)
///   H(n, n+1)   = 1
///   H(q-1, 0)  += exp(+i q theta1),  H(0, q-1) += exp(-i q theta1).
class BlochHamiltonian {
 public:
  BlochHamiltonian(RationalFlux flux, double theta1, double theta2);

  const RationalFlux& flux() const { return flux_; }
  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  std::size_t size() const { return n_; }

  std::complex<double> operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// True when every imaginary part is below `tol`.
  bool is_real(double tol = 1e-12) const;

  /// Real part as a dense symmetric matrix. Throws MalformedMatrix when the
  /// matrix is not real.
  RealMatrix real_part() const;

 private:
  RationalFlux flux_;
  double theta1_;
  double theta2_;
  std::size_t n_;
  std::vector<std::complex<double>> entries_;
};

BlochHamiltonian build_bloch(RationalFlux flux, double theta1, double theta2);

/// Real periodic-tridiagonal form of the Bloch matrix at theta1 = theta2 = phase,
/// valid whenever q * phase is a multiple of pi.
PeriodicTridiagonal extremal_bloch(RationalFlux flux, double phase);

struct Band {
  double lo;
  double hi;
  double width() const { return hi - lo; }
  bool contains(double e) const { return lo <= e && e <= hi; }
};

/// Energy interval strictly between two bands. Gap 0 and gap q are
/// semi-infinite (lo = -inf, hi = +inf respectively).
struct Gap {
  double lo;
  double hi;
  double width() const { return hi - lo; }
  bool closed() const { return !(hi > lo); }
  bool contains(double e) const { return lo < e && e < hi; }
};

enum class SpectrumMode {
  /// Edges symmetrised under E -> -E and computed at min(p, q-p)/q so the
  /// four-fold symmetry is exact in floating point.
  Canonical,
  /// Raw band edges from the two extremal Bloch matrices at the given flux.
  Direct,
};

class Spectrum {
 public:
  Spectrum(RationalFlux flux, std::vector<Band> bands);

  const RationalFlux& flux() const { return flux_; }
  const std::vector<Band>& bands() const { return bands_; }

  /// The q+1 gaps, ordered by energy. Widths below kClosedGapTolerance are
  /// clamped to zero.
  std::vector<Gap> gaps() const;
  Gap gap(std::size_t j) const;

  double min() const { return bands_.front().lo; }
  double max() const { return bands_.back().hi; }

  /// True if e lies in some (closed) band.
  bool in_spectrum(double e) const;

 private:
  RationalFlux flux_;
  std::vector<Band> bands_;
};

/// Band structure at rational flux from the Chambers relation: all band edges
/// are eigenvalues of the Bloch matrices at theta = (0, 0) and (pi/q, pi/q).
Spectrum compute_spectrum(RationalFlux flux, SpectrumMode mode = SpectrumMode::Canonical);

double total_bandwidth(const Spectrum& spectrum);

}  // namespace butterfly
