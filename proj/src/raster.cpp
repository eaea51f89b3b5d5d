#include "butterfly/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "butterfly/parallel.hpp"
#include "butterfly/spectrum.hpp"

namespace butterfly {

namespace {

Rgb hsv_to_rgb(double hue_deg, double saturation, double value) {
  const double c = value * saturation;
  const double h = hue_deg / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(h, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h) % 6) {
    case 0: r = c, g = x; break;
    case 1: r = x, g = c; break;
    case 2: g = c, b = x; break;
    case 3: g = x, b = c; break;
    case 4: r = x, b = c; break;
    default: r = c, b = x; break;
  }
  const double m = value - c;
  auto byte = [m](double v) { return static_cast<std::uint8_t>(std::lround(255.0 * (v + m))); };
  return {byte(r), byte(g), byte(b)};
}

Palette make_palette() {
  Palette p{};
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = hsv_to_rgb(22.5 * static_cast<double>(i), 1.0, 0.9);
  return p;
}

}  // namespace

const Palette& default_palette() {
  static const Palette palette = make_palette();
  return palette;
}

void RenderConfig::validate() const {
  if (width < 16 || height < 16) throw std::invalid_argument("image must be at least 16x16 pixels");
  if (!(phi_min >= 0.0 && phi_max <= 1.0 && phi_min < phi_max)) {
    throw std::invalid_argument("flux window must be a nonempty subinterval of [0, 1]");
  }
  if (!(e_min >= -4.0 && e_max <= 4.0 && e_min < e_max)) {
    throw std::invalid_argument("energy window must be a nonempty subinterval of [-4, 4]");
  }
  if (q_cap < 1) throw std::invalid_argument("q_cap must be >= 1");
}

double RenderConfig::row_energy(int y) const {
  // Written so rows y and height-1-y sample exactly opposite energies in a
  // symmetric window.
  const double offset = static_cast<double>(height - 1 - 2 * y) * (e_max - e_min) / (2.0 * height);
  return 0.5 * (e_max + e_min) + offset;
}

std::optional<RationalFlux> column_flux(int column, const RenderConfig& config) {
  if (column < 0 || column >= config.width) throw std::out_of_range("column outside the image");
  // a/b lies in [lo, hi] iff lo_s * b <= a * W <= hi_s * b, with the
  // interval scaled by the image width. Exact for the [0, 1] window.
  const double w = config.width;
  const double span = config.phi_max - config.phi_min;
  const double lo_s = config.phi_min * w + span * column;
  const double hi_s = config.phi_min * w + span * (column + 1);
  auto below = [&](std::int64_t a, std::int64_t b) { return static_cast<double>(a) * w < lo_s * static_cast<double>(b); };
  auto above = [&](std::int64_t a, std::int64_t b) { return static_cast<double>(a) * w > hi_s * static_cast<double>(b); };
  auto inside = [&](std::int64_t a, std::int64_t b) { return !below(a, b) && !above(a, b); };

  std::int64_t lp = 0, lq = 1, rp = 1, rq = 1;
  if (inside(lp, lq)) return RationalFlux(lp, lq);
  if (inside(rp, rq)) return RationalFlux(rp, rq);
  while (true) {
    const std::int64_t mp = lp + rp;
    const std::int64_t mq = lq + rq;
    if (mq > config.q_cap) return std::nullopt;
    if (below(mp, mq)) {
      lp = mp, lq = mq;
    } else if (above(mp, mq)) {
      rp = mp, rq = mq;
    } else {
      return RationalFlux(mp, mq);
    }
  }
}

PixelClass classify_pixel(const RationalFlux& flux, double energy, const std::vector<GapRecord>& records) {
  (void)flux;
  // Gap intervals are ordered; find the first whose upper end exceeds e.
  const auto it = std::upper_bound(records.begin(), records.end(), energy,
                                   [](double e, const GapRecord& r) { return e < r.interval.hi; });
  if (it == records.end() || !it->interval.contains(energy) || it->central_closed()) return PixelClass::spectrum();
  return it->k() == 0 ? PixelClass::background() : PixelClass::phase(it->k());
}

Render render(const RenderConfig& config) {
  config.validate();
  Render out;
  out.config = config;
  const int width = config.width;
  const int height = config.height;

  out.columns.resize(static_cast<std::size_t>(width));
  std::map<RationalFlux, std::vector<GapRecord>> by_flux;
  for (int x = 0; x < width; ++x) {
    out.columns[static_cast<std::size_t>(x)].x = x;
    out.columns[static_cast<std::size_t>(x)].flux = column_flux(x, config);
    if (const auto& f = out.columns[static_cast<std::size_t>(x)].flux) by_flux.emplace(*f, std::vector<GapRecord>{});
  }
  std::vector<std::map<RationalFlux, std::vector<GapRecord>>::iterator> slots;
  for (auto it = by_flux.begin(); it != by_flux.end(); ++it) slots.push_back(it);
  parallel_for(slots.size(), [&](std::size_t i) {
    slots[i]->second = label_spectrum(compute_spectrum(slots[i]->first));
  });
  for (auto& column : out.columns) {
    if (column.flux) column.gaps = by_flux.at(*column.flux);
  }

  std::vector<double> energies(static_cast<std::size_t>(height));
  for (int y = 0; y < height; ++y) energies[static_cast<std::size_t>(y)] = config.row_energy(y);

  out.classes.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), PixelClass::background());
  out.image = {width, height, std::vector<std::uint8_t>(out.classes.size() * 3)};
  for (int x = 0; x < width; ++x) {
    const auto& column = out.columns[static_cast<std::size_t>(x)];
    for (int y = 0; y < height; ++y) {
      const std::size_t i = static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
      const PixelClass cls = column.flux ? classify_pixel(*column.flux, energies[static_cast<std::size_t>(y)], column.gaps)
                                         : PixelClass::background();
      out.classes[i] = cls;
      Rgb color = kWhite;
      if (cls.kind == PixelClass::Kind::Phase) color = config.palette[palette_index(cls.k)];
      if (cls.kind == PixelClass::Kind::Spectrum && config.black_spectrum) color = kBlack;
      out.image.rgb[3 * i] = color.r;
      out.image.rgb[3 * i + 1] = color.g;
      out.image.rgb[3 * i + 2] = color.b;
    }
  }
  return out;
}

std::string encode_ppm(const Image& image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  out.append(image.rgb.begin(), image.rgb.end());
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace butterfly
