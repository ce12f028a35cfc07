#include "wsnloc/deployment.hpp"

#include <cmath>
#include <stdexcept>

namespace wsnloc {

namespace {

void require_count(std::size_t count, const char* what) {
  if (count == 0) throw std::invalid_argument(std::string(what) + ": count must be >= 1");
}

void require_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be finite and > 0");
  }
}

Point2D polar_offset(const Point2D& origin, double radius, double heading) {
  return {origin.x + radius * std::cos(heading), origin.y + radius * std::sin(heading)};
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string layout_kind_name(const AnchorLayout& layout) {
  return std::visit(Overloaded{
                        [](const RandomLayout&) { return std::string("random"); },
                        [](const GridLayout&) { return std::string("grid"); },
                        [](const PhiChainLayout&) { return std::string("phi_chain_spiral"); },
                        [](const SunflowerLayout&) {
                          return std::string("golden_angle_sunflower");
                        },
                    },
                    layout);
}

const Point2D& Deployment::position(std::size_t node_id) const {
  if (node_id < anchors.size()) return anchors[node_id];
  return unknowns.at(node_id - anchors.size());
}

std::vector<Point2D> deploy_unknowns_uniform(const FieldSpec& field, std::size_t count,
                                             RngStream& rng) {
  require_count(count, "deploy_unknowns_uniform");
  std::vector<Point2D> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Sequenced explicitly: x is drawn before y.
    const double x = rng.uniform(0.0, field.width);
    const double y = rng.uniform(0.0, field.height);
    out.emplace_back(x, y);
  }
  return out;
}

std::vector<Point2D> phi_chain_unclamped(const FieldSpec& field, std::size_t count, double d1) {
  require_count(count, "deploy_anchors_phi_chain");
  require_positive(d1, "phi chain d1");
  std::vector<Point2D> out;
  out.reserve(count);
  out.push_back(field.center());
  double chord = d1;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    out.push_back(polar_offset(out.back(), chord, static_cast<double>(i) * kGoldenAngle));
    chord *= kPhi;
  }
  return out;
}

std::vector<Point2D> deploy_anchors_phi_chain(const FieldSpec& field, std::size_t count,
                                              double d1) {
  auto points = phi_chain_unclamped(field, count, d1);
  for (auto& p : points) p = field.clamp(p);
  return points;
}

double default_sunflower_scale(const FieldSpec& field, std::size_t count) {
  require_count(count, "default_sunflower_scale");
  return 0.5 * std::min(field.width, field.height) / std::sqrt(static_cast<double>(count));
}

std::vector<Point2D> deploy_anchors_sunflower(const FieldSpec& field, std::size_t count,
                                              double scale_c) {
  require_count(count, "deploy_anchors_sunflower");
  require_positive(scale_c, "sunflower scale_c");
  const Point2D center = field.center();
  std::vector<Point2D> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double k = static_cast<double>(i);
    out.push_back(field.clamp(polar_offset(center, scale_c * std::sqrt(k), k * kGoldenAngle)));
  }
  return out;
}

std::vector<Point2D> deploy_anchors_grid(const FieldSpec& field, std::size_t count) {
  require_count(count, "deploy_anchors_grid");
  auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
  while (cols * cols < count) ++cols;  // guard against sqrt rounding
  const std::size_t rows = (count + cols - 1) / cols;

  const double dx = field.width / static_cast<double>(cols);
  const double dy = field.height / static_cast<double>(rows);
  std::vector<Point2D> out;
  out.reserve(count);
  for (std::size_t r = 0; r < rows && out.size() < count; ++r) {
    for (std::size_t c = 0; c < cols && out.size() < count; ++c) {
      out.emplace_back((static_cast<double>(c) + 0.5) * dx, (static_cast<double>(r) + 0.5) * dy);
    }
  }
  return out;
}

std::vector<Point2D> deploy_anchors_random(const FieldSpec& field, std::size_t count,
                                           RngStream& rng) {
  require_count(count, "deploy_anchors_random");
  return deploy_unknowns_uniform(field, count, rng);
}

std::vector<Point2D> place_anchors(const AnchorLayout& layout, const FieldSpec& field,
                                   std::size_t count, RngStream& rng) {
  return std::visit(
      Overloaded{
          [&](const RandomLayout&) { return deploy_anchors_random(field, count, rng); },
          [&](const GridLayout&) { return deploy_anchors_grid(field, count); },
          [&](const PhiChainLayout& l) { return deploy_anchors_phi_chain(field, count, l.d1); },
          [&](const SunflowerLayout& l) {
            const double c = l.scale_c.value_or(default_sunflower_scale(field, count));
            return deploy_anchors_sunflower(field, count, c);
          },
      },
      layout);
}

}  // namespace wsnloc
