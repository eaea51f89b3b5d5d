#pragma once

// Structural checks on a finished render, shared by the unit and acceptance
// tests.

#include <cstdint>
#include <map>

#include "butterfly/raster.hpp"

namespace render_checks {

struct Antisymmetry {
  bool mirror = true;
  bool vertical = true;
  std::size_t mirror_pairs = 0;
};

inline Antisymmetry check_antisymmetry(const butterfly::Render& r) {
  Antisymmetry out;
  const int w = r.config.width, h = r.config.height;
  for (int x = 0; x < w; ++x) {
    const auto& f = r.columns[static_cast<std::size_t>(x)].flux;
    const auto& g = r.columns[static_cast<std::size_t>(w - 1 - x)].flux;
    const bool paired = f && g && *g == f->mirror();
    if (paired) ++out.mirror_pairs;
    for (int y = 0; y < h; ++y) {
      const std::int64_t k = r.at(x, y).label();
      if (paired && k != -r.at(w - 1 - x, y).label()) out.mirror = false;
      if (k != -r.at(x, h - 1 - y).label()) out.vertical = false;
    }
  }
  return out;
}

/// Pixel counts per label of the first colored run met just past the outer
/// band, scanning up from the bottom (lower) or down from the top (upper) in
/// the columns [x_begin, x_end).
inline std::map<std::int64_t, std::size_t> edge_runs(const butterfly::Render& r, int x_begin, int x_end, bool lower) {
  using Kind = butterfly::PixelClass::Kind;
  std::map<std::int64_t, std::size_t> tally;
  const int h = r.config.height;
  for (int x = x_begin; x < x_end; ++x) {
    int y = lower ? h - 1 : 0;
    const int step = lower ? -1 : 1;
    auto inside = [&](int yy) { return yy >= 0 && yy < h; };
    while (inside(y) && r.at(x, y).kind == Kind::Background) y += step;
    if (!inside(y) || r.at(x, y).kind != Kind::Spectrum) continue;
    while (inside(y) && r.at(x, y).kind == Kind::Spectrum) y += step;
    if (!inside(y) || r.at(x, y).kind != Kind::Phase) continue;
    const std::int64_t k = r.at(x, y).k;
    while (inside(y) && r.at(x, y) == butterfly::PixelClass::phase(k)) {
      ++tally[k];
      y += step;
    }
  }
  return tally;
}

inline std::int64_t dominant(const std::map<std::int64_t, std::size_t>& tally) {
  std::int64_t best = 0;
  std::size_t most = 0;
  for (const auto& [k, n] : tally)
    if (n > most) best = k, most = n;
  return best;
}

}  // namespace render_checks
