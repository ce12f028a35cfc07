#pragma once

// Geometry primitives, constants and the seeded randomness used everywhere
// in the simulator. All lengths are meters.

#include <array>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wsnloc {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Failure to read or write a file.
class IoError : public Error {
public:
  IoError(const std::filesystem::path& path, const std::string& what)
      : Error(path.string() + ": " + what), path_(path) {}
  const std::filesystem::path& path() const noexcept { return path_; }

private:
  std::filesystem::path path_;
};

inline constexpr double kPhi = std::numbers::phi;
/// 2*pi*(1 - 1/phi), roughly 137.5 degrees.
inline constexpr double kGoldenAngle = 2.0 * std::numbers::pi * (1.0 - 1.0 / kPhi);

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2D() = default;
  /// Throws std::invalid_argument on a non-finite coordinate.
  Point2D(double x_m, double y_m);

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

double distance(const Point2D& a, const Point2D& b) noexcept;

struct FieldSpec {
  double width = 100.0;
  double height = 100.0;

  constexpr FieldSpec() = default;
  /// Throws std::invalid_argument unless both extents are finite and > 0.
  FieldSpec(double width_m, double height_m);

  Point2D center() const { return {0.5 * width, 0.5 * height}; }
  double diagonal() const;
  bool contains(const Point2D& p) const noexcept;
  Point2D clamp(const Point2D& p) const noexcept;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

enum class Algorithm : std::uint8_t { Grl = 0, DvHop = 1, Centroid = 2 };

inline constexpr std::array<Algorithm, 3> kAllAlgorithms{Algorithm::Grl, Algorithm::DvHop,
                                                         Algorithm::Centroid};

/// Display name used in CSV output ("GRL", "DV-Hop", "Centroid").
std::string_view display_name(Algorithm a) noexcept;
/// Config key ("grl", "dvhop", "centroid").
std::string_view config_key(Algorithm a) noexcept;
/// Accepts either the config key or the display name.
Algorithm parse_algorithm(std::string_view name);

// Deterministic pseudo-random source. The engine is std::mt19937_64, whose
// output sequence is fixed by the C++ standard; floating-point draws are
// derived from raw 64-bit words here rather than through the
// implementation-defined std distributions, so a seed reproduces the same
// values with any conforming standard library.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stream for one Monte Carlo trial; depends only on its two arguments.
RngStream derive_trial_stream(std::uint64_t master_seed, std::uint64_t trial_index);

}  // namespace wsnloc
