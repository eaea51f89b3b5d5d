#include "butterfly/eigen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace butterfly {

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : RealMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw MalformedMatrix("matrix literal is not square");
    std::size_t j = 0;
    for (double v : row) (*this)(i, j++) = v;
    ++i;
  }
}

void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e.resize(n);
  e[n - 1] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxIterations = 60;

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iterations > kMaxIterations) {
        throw std::runtime_error("tridiagonal QL failed to converge");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

std::vector<double> eigenvalues_sym(const RealMatrix& input) {
  const std::size_t n = input.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(std::abs(input(i, j) - input(j, i)) <= kSymmetryTolerance)) {
        throw MalformedMatrix("matrix is not symmetric");
      }
    }
  }
  if (n == 0) return {};

  // Work on the lower triangle only, mirrored into a full copy.
  RealMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = input(i, j);
  }

  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += a(i, k) * a(i, k);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) continue;
    const double alpha = a(k + 1, k) >= 0.0 ? -norm : norm;

    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += v[i] * v[i];
    }
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    double vp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      p[i] = beta * s;
      vp += v[i] * p[i];
    }
    const double kappa = vp / vnorm2;
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= kappa * v[i];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= v[i] * p[j] + p[i] * v[j];
    }
    a(k + 1, k) = a(k, k + 1) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = a(k, i) = 0.0;
  }

  std::vector<double> d(n), e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a(i + 1, i);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

RealMatrix PeriodicTridiagonal::to_dense() const {
  const std::size_t n = size();
  RealMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = off[i];
  if (n == 1) {
    m(0, 0) += 2.0 * corner;
  } else if (n > 1) {
    m(0, n - 1) += corner;
    m(n - 1, 0) = m(0, n - 1);
  }
  return m;
}

namespace {

// Symmetric matrix with half-bandwidth <= 3, lower band stored per column.
class BandMatrix {
 public:
  static constexpr std::size_t kWidth = 4;

  explicit BandMatrix(std::size_t n) : n_(n), data_(n * kWidth, 0.0) {}

  std::size_t size() const { return n_; }

  double get(std::size_t i, std::size_t j) const {
    if (i < j) std::swap(i, j);
    return i - j < kWidth ? data_[j * kWidth + (i - j)] : 0.0;
  }
  void set(std::size_t i, std::size_t j, double v) {
    if (i < j) std::swap(i, j);
    data_[j * kWidth + (i - j)] = v;
  }

  // M <- G M G^T with G the rotation [c s; -s c] acting on rows r, r+1.
  void rotate(std::size_t r, double c, double s) {
    const std::size_t lo = r >= 2 ? r - 2 : 0;
    const std::size_t hi = std::min(n_ - 1, r + 3);
    for (std::size_t i = lo; i <= hi; ++i) {
      if (i == r || i == r + 1) continue;
      const double x = get(i, r);
      const double y = get(i, r + 1);
      set(i, r, c * x + s * y);
      set(i, r + 1, -s * x + c * y);
    }
    const double a = get(r, r);
    const double b = get(r + 1, r);
    const double d = get(r + 1, r + 1);
    set(r, r, c * c * a + 2.0 * c * s * b + s * s * d);
    set(r + 1, r + 1, s * s * a - 2.0 * c * s * b + c * c * d);
    set(r + 1, r, c * s * (d - a) + (c * c - s * s) * b);
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

}  // namespace

std::vector<double> eigenvalues_periodic(const PeriodicTridiagonal& matrix) {
  const std::size_t n = matrix.size();
  if (matrix.off.size() + 1 != n && !(n == 0 && matrix.off.empty())) {
    throw MalformedMatrix("periodic tridiagonal: off-diagonal length must be size-1");
  }
  if (n <= 3) return eigenvalues_sym(matrix.to_dense());

  // Interleave: position 2i holds site i, position 2i+1 holds site n-1-i.
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0, pos = 0; pos < n; ++i) {
    position[i] = pos++;
    if (pos < n) position[n - 1 - i] = pos++;
  }

  BandMatrix band(n);
  for (std::size_t i = 0; i < n; ++i) band.set(position[i], position[i], matrix.diag[i]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    band.set(position[i], position[i + 1], matrix.off[i]);
  }
  band.set(position[0], position[n - 1], band.get(position[0], position[n - 1]) + matrix.corner);

  // Rutishauser reduction: clear the second sub-diagonal column by column and
  // chase the resulting bulge off the bottom of the band.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t col = j;
    std::size_t r = j + 1;
    while (r + 1 < n) {
      const double x = band.get(r, col);
      const double y = band.get(r + 1, col);
      if (y == 0.0) break;
      const double h = std::hypot(x, y);
      band.rotate(r, x / h, y / h);
      band.set(r + 1, col, 0.0);
      col = r;
      r += 2;
    }
  }

  std::vector<double> d(n), e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = band.get(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = band.get(i + 1, i);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace butterfly
