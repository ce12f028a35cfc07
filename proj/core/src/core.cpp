#include "wsnloc/core.hpp"

#include <algorithm>
#include <cmath>

namespace wsnloc {

Point2D::Point2D(double x_m, double y_m) : x(x_m), y(y_m) {
  if (!std::isfinite(x_m) || !std::isfinite(y_m)) {
    throw std::invalid_argument("Point2D: coordinates must be finite");
  }
}

double distance(const Point2D& a, const Point2D& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

FieldSpec::FieldSpec(double width_m, double height_m) : width(width_m), height(height_m) {
  if (!(std::isfinite(width_m) && width_m > 0.0 && std::isfinite(height_m) && height_m > 0.0)) {
    throw std::invalid_argument("FieldSpec: width and height must be finite and > 0");
  }
}

double FieldSpec::diagonal() const { return std::hypot(width, height); }

bool FieldSpec::contains(const Point2D& p) const noexcept {
  return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
}

Point2D FieldSpec::clamp(const Point2D& p) const noexcept {
  Point2D out;
  out.x = std::clamp(p.x, 0.0, width);
  out.y = std::clamp(p.y, 0.0, height);
  return out;
}

std::string_view display_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Grl: return "GRL";
    case Algorithm::DvHop: return "DV-Hop";
    case Algorithm::Centroid: return "Centroid";
  }
  return "?";
}

std::string_view config_key(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Grl: return "grl";
    case Algorithm::DvHop: return "dvhop";
    case Algorithm::Centroid: return "centroid";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (name == config_key(a) || name == display_name(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

double RngStream::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream derive_trial_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
  return RngStream(mix64(mix64(master_seed) ^ mix64(trial_index ^ 0x5851f42d4c957f2dULL)));
}

}  // namespace wsnloc
