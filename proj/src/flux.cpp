#include "butterfly/flux.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace butterfly {

RationalFlux::RationalFlux(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw std::invalid_argument("flux denominator must be positive");
  if (p < 0 || p > q) throw std::invalid_argument("flux must lie in [0, 1]");
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

RationalFlux RationalFlux::parse(std::string_view text, bool* was_reduced) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("flux must be written as P/Q, got '" + std::string(text) + "'");
  }
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto* first = part.data();
    const auto* last = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("malformed flux '" + std::string(text) + "'");
    }
    return v;
  };
  const std::int64_t p = parse_int(text.substr(0, slash));
  const std::int64_t q = parse_int(text.substr(slash + 1));
  RationalFlux flux(p, q);
  if (was_reduced != nullptr) *was_reduced = flux.q() != q;
  return flux;
}

std::string RationalFlux::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

BezoutTriple extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_x = std::exchange(x, old_x - quot * x);
    old_y = std::exchange(y, old_y - quot * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::domain_error("modulus must be positive");
  if (m == 1) return 0;
  const auto [g, x, y] = extended_gcd(floor_mod(a, m), m);
  (void)y;
  if (g != 1) throw std::domain_error("no modular inverse: arguments are not coprime");
  return floor_mod(x, m);
}

}  // namespace butterfly
