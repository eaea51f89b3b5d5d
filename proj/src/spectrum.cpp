#include "butterfly/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace butterfly {

namespace {

// 2 cos(2 pi m/q + phase), with the residue m reduced first so large n p
// products do not lose precision.
double diagonal_entry(std::int64_t n, const RationalFlux& flux, double phase) {
  const std::int64_t m = floor_mod(n * flux.p(), flux.q());
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(flux.q()) + phase;
  return 2.0 * std::cos(angle);
}

}  // namespace

BlochHamiltonian::BlochHamiltonian(RationalFlux flux, double theta1, double theta2)
    : flux_(flux),
      theta1_(theta1),
      theta2_(theta2),
      n_(static_cast<std::size_t>(flux.q())),
      entries_(n_ * n_) {
  auto at = [&](std::size_t i, std::size_t j) -> std::complex<double>& { return entries_[i * n_ + j]; };
  for (std::size_t n = 0; n < n_; ++n) {
    at(n, n) = diagonal_entry(static_cast<std::int64_t>(n), flux_, theta2_);
  }
  for (std::size_t n = 0; n + 1 < n_; ++n) {
    at(n, n + 1) += 1.0;
    at(n + 1, n) += 1.0;
  }
  const double wrap = static_cast<double>(flux_.q()) * theta1_;
  const std::complex<double> forward = std::polar(1.0, wrap);
  at(n_ - 1, 0) += forward;
  at(0, n_ - 1) += std::conj(forward);
}

bool BlochHamiltonian::is_real(double tol) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [tol](const std::complex<double>& z) { return std::abs(z.imag()) <= tol; });
}

RealMatrix BlochHamiltonian::real_part() const {
  if (!is_real()) throw MalformedMatrix("Bloch matrix has non-real entries at these phases");
  RealMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = entries_[i * n_ + j].real();
  }
  return m;
}

BlochHamiltonian build_bloch(RationalFlux flux, double theta1, double theta2) {
  return BlochHamiltonian(flux, theta1, theta2);
}

PeriodicTridiagonal extremal_bloch(RationalFlux flux, double phase) {
  const auto q = static_cast<std::size_t>(flux.q());
  PeriodicTridiagonal m;
  m.diag.resize(q);
  for (std::size_t n = 0; n < q; ++n) m.diag[n] = diagonal_entry(static_cast<std::int64_t>(n), flux, phase);
  m.off.assign(q - 1, 1.0);
  // cos(q * phase) is exactly +-1 at the two extremal points.
  m.corner = std::lround(std::cos(static_cast<double>(q) * phase)) >= 0 ? 1.0 : -1.0;
  return m;
}

Spectrum::Spectrum(RationalFlux flux, std::vector<Band> bands) : flux_(flux), bands_(std::move(bands)) {
  if (bands_.size() != static_cast<std::size_t>(flux_.q())) {
    throw std::invalid_argument("spectrum at p/q must have exactly q bands");
  }
}

Gap Spectrum::gap(std::size_t j) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::size_t q = bands_.size();
  if (j > q) throw std::out_of_range("gap index exceeds q");
  if (j == 0) return {-inf, bands_.front().lo};
  if (j == q) return {bands_.back().hi, inf};
  const double lo = bands_[j - 1].hi;
  const double hi = bands_[j].lo;
  if (hi - lo < kClosedGapTolerance) {
    const double mid = 0.5 * (lo + hi);
    return {mid, mid};
  }
  return {lo, hi};
}

std::vector<Gap> Spectrum::gaps() const {
  std::vector<Gap> out;
  out.reserve(bands_.size() + 1);
  for (std::size_t j = 0; j <= bands_.size(); ++j) out.push_back(gap(j));
  return out;
}

bool Spectrum::in_spectrum(double e) const {
  const auto it = std::lower_bound(bands_.begin(), bands_.end(), e,
                                   [](const Band& b, double x) { return b.hi < x; });
  return it != bands_.end() && it->contains(e);
}

Spectrum compute_spectrum(RationalFlux flux, SpectrumMode mode) {
  const RationalFlux solved =
      mode == SpectrumMode::Canonical && 2 * flux.p() > flux.q() ? flux.mirror() : flux;
  const double q = static_cast<double>(solved.q());
  const std::vector<double> at_zero = eigenvalues_periodic(extremal_bloch(solved, 0.0));
  const std::vector<double> at_pi = eigenvalues_periodic(extremal_bloch(solved, std::numbers::pi / q));

  const std::size_t n = at_zero.size();
  std::vector<Band> bands(n);
  for (std::size_t i = 0; i < n; ++i) {
    bands[i] = {std::min(at_zero[i], at_pi[i]), std::max(at_zero[i], at_pi[i])};
  }
  if (mode == SpectrumMode::Canonical) {
    // Band i mirrors band n-1-i; a - b == -(b - a) exactly in IEEE arithmetic.
    std::vector<Band> sym(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Band& mirror = bands[n - 1 - i];
      sym[i] = {0.5 * (bands[i].lo - mirror.hi), 0.5 * (bands[i].hi - mirror.lo)};
    }
    bands = std::move(sym);
  }
  return Spectrum(flux, std::move(bands));
}

double total_bandwidth(const Spectrum& spectrum) {
  double total = 0.0;
  for (const Band& b : spectrum.bands()) total += b.width();
  return total;
}

}  // namespace butterfly
