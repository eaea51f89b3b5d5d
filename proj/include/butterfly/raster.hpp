#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "butterfly/flux.hpp"
#include "butterfly/labels.hpp"

namespace butterfly {

struct Rgb {
  std::uint8_t r, g, b;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

using Palette = std::array<Rgb, 16>;

/// Sixteen hues at 22.5 degree steps, full saturation, value 0.9.
const Palette& default_palette();

/// Palette slot for Hall conductance k (k mod 16, non-negative).
inline std::size_t palette_index(std::int64_t k) { return static_cast<std::size_t>(((k % 16) + 16) % 16); }

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};

/// Flux runs left to right, energy bottom to top (row 0 is e_max).
struct RenderConfig {
  int width = 512;
  int height = 512;
  double phi_min = 0.0;
  double phi_max = 1.0;
  double e_min = -4.0;
  double e_max = 4.0;
  std::int64_t q_cap = 30;
  Palette palette = default_palette();
  /// Paint bands black instead of white.
  bool black_spectrum = false;

  /// Throws std::invalid_argument when the config is unusable.
  void validate() const;

  /// Energy sampled by pixel row y (its centre).
  double row_energy(int y) const;
};

struct PixelClass {
  enum class Kind : std::uint8_t { Spectrum, Phase, Background };
  Kind kind = Kind::Background;
  std::int64_t k = 0;

  static PixelClass spectrum() { return {Kind::Spectrum, 0}; }
  static PixelClass phase(std::int64_t k) { return {Kind::Phase, k}; }
  static PixelClass background() { return {Kind::Background, 0}; }

  /// Hall conductance carried by the pixel; 0 for spectrum and background.
  std::int64_t label() const { return kind == Kind::Phase ? k : 0; }
  friend bool operator==(const PixelClass&, const PixelClass&) = default;
};

/// Fraction with the smallest denominator <= config.q_cap inside the closed
/// flux interval covered by `column`, found by Stern-Brocot descent. Empty
/// when no such fraction exists.
std::optional<RationalFlux> column_flux(int column, const RenderConfig& config);

/// `records` must be label_spectrum(compute_spectrum(flux)).
PixelClass classify_pixel(const RationalFlux& flux, double energy, const std::vector<GapRecord>& records);

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, top row first

  Rgb at(int x, int y) const {
    const auto i = 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x));
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
  }
};

struct ColumnGeometry {
  int x = 0;
  std::optional<RationalFlux> flux;
  std::vector<GapRecord> gaps;
};

struct Render {
  RenderConfig config;
  std::vector<PixelClass> classes;  // row-major, top row first
  std::vector<ColumnGeometry> columns;
  Image image;

  const PixelClass& at(int x, int y) const {
    return classes[static_cast<std::size_t>(y) * static_cast<std::size_t>(config.width) + static_cast<std::size_t>(x)];
  }
};

/// Classifies every pixel and paints it. Deterministic: the same config
/// always yields the same bytes.
Render render(const RenderConfig& config);

/// Binary PPM (P6) encoding.
std::string encode_ppm(const Image& image);

/// Throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace butterfly
