#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "butterfly/raster.hpp"

namespace butterfly {

/// Square boolean raster; one cell per box of side 1/size.
struct Mask {
  int size = 0;
  std::vector<std::uint8_t> cells;  // row-major

  explicit Mask(int n = 0) : size(n), cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  bool get(int x, int y) const { return cells[index(x, y)] != 0; }
  void set(int x, int y, bool v = true) { cells[index(x, y)] = v ? 1 : 0; }
  std::size_t count() const;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(size) + static_cast<std::size_t>(x);
  }
};

/// Least-squares slope of log N(eps) against log(1/eps), where each mask is
/// one scale: 1/eps = mask.size and N(eps) = occupied cells. Throws
/// std::invalid_argument for fewer than three masks or an empty mask.
double box_counting_slope(std::span<const Mask> masks);

/// Pixels of P(k) with a 4-neighbour outside P(k). Requires a square render.
Mask phase_boundary_mask(const Render& render, std::int64_t k);

struct DimensionEstimate {
  double slope = 0.0;
  std::vector<int> resolutions;
  std::vector<std::size_t> counts;
};

/// Renders the full diagram at each resolution (with q_cap equal to the
/// resolution unless `q_cap` is positive) and box-counts the boundary of
/// P(k). Throws std::invalid_argument for fewer than three resolutions.
DimensionEstimate boundary_dimension_estimate(std::int64_t k, std::span<const int> resolutions,
                                              std::int64_t q_cap = 0);

/// Calibration sets of known dimension.
Mask diagonal_line_mask(int size);
Mask filled_square_mask(int size);

}  // namespace butterfly
