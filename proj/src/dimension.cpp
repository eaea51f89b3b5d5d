#include "butterfly/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace butterfly {

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), std::uint8_t{1}));
}

double box_counting_slope(std::span<const Mask> masks) {
  if (masks.size() < 3) throw std::invalid_argument("box counting needs at least three resolutions");
  std::vector<double> xs, ys;
  for (const Mask& m : masks) {
    const std::size_t n = m.count();
    if (n == 0) throw std::invalid_argument("box counting: empty mask at size " + std::to_string(m.size));
    xs.push_back(std::log(static_cast<double>(m.size)));
    ys.push_back(std::log(static_cast<double>(n)));
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("box counting needs distinct resolutions");
  return sxy / sxx;
}

Mask phase_boundary_mask(const Render& render, std::int64_t k) {
  const int w = render.config.width;
  const int h = render.config.height;
  if (w != h) throw std::invalid_argument("boundary mask needs a square render");
  const PixelClass target = PixelClass::phase(k);
  Mask mask(w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!(render.at(x, y) == target)) continue;
      const bool edge = (x > 0 && !(render.at(x - 1, y) == target)) || (x + 1 < w && !(render.at(x + 1, y) == target)) ||
                        (y > 0 && !(render.at(x, y - 1) == target)) || (y + 1 < h && !(render.at(x, y + 1) == target));
      if (edge) mask.set(x, y);
    }
  }
  return mask;
}

DimensionEstimate boundary_dimension_estimate(std::int64_t k, std::span<const int> resolutions, std::int64_t q_cap) {
  if (resolutions.size() < 3) throw std::invalid_argument("dimension estimate needs at least three resolutions");
  DimensionEstimate est;
  std::vector<Mask> masks;
  for (int n : resolutions) {
    RenderConfig config;
    config.width = config.height = n;
    config.q_cap = q_cap > 0 ? q_cap : n;
    masks.push_back(phase_boundary_mask(render(config), k));
    est.resolutions.push_back(n);
    est.counts.push_back(masks.back().count());
  }
  est.slope = box_counting_slope(masks);
  return est;
}

Mask diagonal_line_mask(int size) {
  Mask m(size);
  for (int i = 0; i < size; ++i) m.set(i, i);
  return m;
}

Mask filled_square_mask(int size) {
  Mask m(size);
  for (int y = size / 4; y < size - size / 4; ++y) {
    for (int x = size / 4; x < size - size / 4; ++x) m.set(x, y);
  }
  return m;
}

}  // namespace butterfly
