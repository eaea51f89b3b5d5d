#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace butterfly {

/// Magnetic flux per unit cell as a reduced fraction p/q in [0, 1].
///
/// Construction always reduces, so two fluxes compare equal iff they are the
/// same rational number.
class RationalFlux {
 public:
  RationalFlux() = default;

  /// Reduces p/q. Throws std::invalid_argument unless q > 0 and 0 <= p <= q.
  RationalFlux(std::int64_t p, std::int64_t q);

  /// Parses "P/Q". Sets `was_reduced` when the input was not already in
  /// lowest terms.
  static RationalFlux parse(std::string_view text, bool* was_reduced = nullptr);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  double value() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  /// The time-reversed flux (q - p)/q.
  RationalFlux mirror() const { return RationalFlux(q_ - p_, q_); }

  std::string str() const;

  friend bool operator==(const RationalFlux&, const RationalFlux&) = default;
  friend auto operator<=>(const RationalFlux& a, const RationalFlux& b) {
    // Cross-multiplication is exact for the denominators used here.
    return a.p_ * b.q_ <=> b.p_ * a.q_;
  }

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// Result of the extended Euclidean algorithm: a*x + b*y = g.
struct BezoutTriple {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

BezoutTriple extended_gcd(std::int64_t a, std::int64_t b);

/// Non-negative residue of a modulo m (m > 0).
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m in [0, m). Throws std::domain_error when
/// gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace butterfly
