#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace butterfly {

/// Thrown when a matrix handed to a symmetric solver is not symmetric.
class MalformedMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Largest |a(i,j) - a(j,i)| tolerated by eigenvalues_sym.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Eigenvalues of a dense real symmetric matrix in nondecreasing order.
///
/// Householder tridiagonalisation followed by implicit QL. The evaluation
/// order is fixed, so repeated calls return bitwise-identical results.
/// Throws MalformedMatrix for non-square or non-symmetric input.
std::vector<double> eigenvalues_sym(const RealMatrix& matrix);

/// Real symmetric matrix that is tridiagonal apart from one corner coupling:
///   H(n, n+1) = H(n+1, n) = off[n]          for n = 0..size-2
///   H(0, size-1) = H(size-1, 0) += corner
/// For size 1 the corner couples the site to itself in both directions and
/// contributes 2*corner to the diagonal.
struct PeriodicTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
  double corner = 0.0;

  std::size_t size() const { return diag.size(); }
  RealMatrix to_dense() const;
};

/// Eigenvalues of a periodic tridiagonal matrix in nondecreasing order.
///
/// The interleaved ordering 0, n-1, 1, n-2, ... turns the matrix into a
/// pentadiagonal one, which Givens band reduction brings to tridiagonal form
/// in O(n^2) before the QL sweep.
std::vector<double> eigenvalues_periodic(const PeriodicTridiagonal& matrix);

/// Implicit QL on a symmetric tridiagonal matrix; `diag` is overwritten with
/// the unsorted eigenvalues and `sub` (sub-diagonal, same length as `diag`,
/// last entry ignored) is destroyed.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& sub);

}  // namespace butterfly
