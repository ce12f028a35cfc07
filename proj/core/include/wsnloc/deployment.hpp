#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wsnloc/core.hpp"

namespace wsnloc {

struct RandomLayout {
  friend bool operator==(const RandomLayout&, const RandomLayout&) = default;
};

struct GridLayout {
  friend bool operator==(const GridLayout&, const GridLayout&) = default;
};

/// Chord lengths grow by phi from one anchor to the next.
struct PhiChainLayout {
  double d1 = 2.0;
  friend bool operator==(const PhiChainLayout&, const PhiChainLayout&) = default;
};

/// Vogel spiral. When scale_c is unset it is chosen so the outermost anchor
/// sits near the field edge: 0.5 * min(width, height) / sqrt(count).
struct SunflowerLayout {
  std::optional<double> scale_c;
  friend bool operator==(const SunflowerLayout&, const SunflowerLayout&) = default;
};

using AnchorLayout = std::variant<RandomLayout, GridLayout, PhiChainLayout, SunflowerLayout>;

/// "random", "grid", "phi_chain_spiral" or "golden_angle_sunflower".
std::string layout_kind_name(const AnchorLayout& layout);

struct Deployment {
  FieldSpec field;
  std::vector<Point2D> anchors;
  std::vector<Point2D> unknowns;

  std::size_t node_count() const { return anchors.size() + unknowns.size(); }
  /// Anchors occupy node ids [0, anchors.size()), unknowns follow.
  const Point2D& position(std::size_t node_id) const;
  std::size_t unknown_node_id(std::size_t unknown_index) const {
    return anchors.size() + unknown_index;
  }
};

std::vector<Point2D> deploy_unknowns_uniform(const FieldSpec& field, std::size_t count,
                                             RngStream& rng);

/// Positions before clamping; anchor i+1 = anchor i + d1*phi^i at heading
/// i*golden_angle, anchor 0 at the field center.
std::vector<Point2D> phi_chain_unclamped(const FieldSpec& field, std::size_t count, double d1);
std::vector<Point2D> deploy_anchors_phi_chain(const FieldSpec& field, std::size_t count,
                                              double d1);

double default_sunflower_scale(const FieldSpec& field, std::size_t count);
std::vector<Point2D> deploy_anchors_sunflower(const FieldSpec& field, std::size_t count,
                                              double scale_c);

std::vector<Point2D> deploy_anchors_grid(const FieldSpec& field, std::size_t count);
std::vector<Point2D> deploy_anchors_random(const FieldSpec& field, std::size_t count,
                                           RngStream& rng);

/// Dispatch on layout kind. `rng` is only consumed by RandomLayout.
std::vector<Point2D> place_anchors(const AnchorLayout& layout, const FieldSpec& field,
                                   std::size_t count, RngStream& rng);

}  // namespace wsnloc
