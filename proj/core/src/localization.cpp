#include "wsnloc/localization.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace wsnloc {

namespace {

struct Reachable {
  std::vector<std::size_t> anchor_index;
  std::vector<std::int32_t> hops;
};

Reachable reachable_anchors(std::size_t node, const HopTable& table) {
  Reachable r;
  for (std::size_t k = 0; k < table.anchor_count(); ++k) {
    if (auto h = table.hops(node, k)) {
      r.anchor_index.push_back(k);
      r.hops.push_back(*h);
    }
  }
  return r;
}

double mean_of(std::span<const std::int32_t> values) {
  double sum = 0.0;
  for (auto v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void check_anchor_span(std::span<const Point2D> anchors, const HopTable& table) {
  if (anchors.size() != table.anchor_count()) {
    throw std::invalid_argument("anchor list does not match hop table columns");
  }
}

}  // namespace

LocalizeResult centroid_localize(std::size_t node, std::span<const Point2D> anchors,
                                 const HopTable& hops) {
  check_anchor_span(anchors, hops);
  double sx = 0.0;
  double sy = 0.0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < hops.anchor_count(); ++k) {
    if (hops.raw(node, k) == 1) {
      sx += anchors[k].x;
      sy += anchors[k].y;
      ++n;
    }
  }
  if (n == 0) return Unlocalizable{Unlocalizable::Reason::NoAnchorInRange};
  const double inv = 1.0 / static_cast<double>(n);
  return Estimate{{sx * inv, sy * inv}, n, 1.0};
}

AnchorHopMatrix anchor_hop_matrix(const HopTable& hops) {
  const auto& ids = hops.anchor_ids();
  AnchorHopMatrix m(ids.size(), std::vector<std::int32_t>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) m[i][j] = hops.raw(ids[i], j);
  }
  return m;
}

namespace {

void check_matrix(std::span<const Point2D> anchors, const AnchorHopMatrix& hops) {
  if (hops.size() != anchors.size()) throw std::invalid_argument("hop matrix size mismatch");
  for (const auto& row : hops) {
    if (row.size() != anchors.size()) throw std::invalid_argument("hop matrix is not square");
  }
}

}  // namespace

AvgHopSize dvhop_avg_hop_size(std::span<const Point2D> anchors, const AnchorHopMatrix& hops) {
  if (anchors.size() < 2) throw ArityError("dvhop_avg_hop_size: need at least 2 anchors");
  check_matrix(anchors, hops);
  double dist_sum = 0.0;
  double hop_sum = 0.0;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (std::size_t j = 0; j < anchors.size(); ++j) {
      if (i == j) continue;
      if (hops[i][j] == HopTable::kUnreachable) {
        throw DisconnectedAnchors("anchors " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are not connected");
      }
      dist_sum += distance(anchors[i], anchors[j]);
      hop_sum += hops[i][j];
    }
  }
  if (hop_sum == 0.0 || dist_sum == 0.0) {
    throw DegenerateHops("dvhop_avg_hop_size: hop or distance sum is zero");
  }
  return {dist_sum / hop_sum};
}

AvgHopSize dvhop_avg_hop_size(std::span<const Point2D> anchors, const HopTable& hops) {
  check_anchor_span(anchors, hops);
  return dvhop_avg_hop_size(anchors, anchor_hop_matrix(hops));
}

std::optional<AvgHopSize> dvhop_avg_hop_size_reachable(std::span<const Point2D> anchors,
                                                       const AnchorHopMatrix& hops) {
  check_matrix(anchors, hops);
  double dist_sum = 0.0;
  double hop_sum = 0.0;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (std::size_t j = 0; j < anchors.size(); ++j) {
      if (i == j || hops[i][j] == HopTable::kUnreachable) continue;
      dist_sum += distance(anchors[i], anchors[j]);
      hop_sum += hops[i][j];
    }
  }
  if (hop_sum <= 0.0 || dist_sum <= 0.0) return std::nullopt;
  return AvgHopSize{dist_sum / hop_sum};
}

std::vector<std::optional<AvgHopSize>> dvhop_per_anchor_hop_sizes(
    std::span<const Point2D> anchors, const AnchorHopMatrix& hops) {
  check_matrix(anchors, hops);
  std::vector<std::optional<AvgHopSize>> out(anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    double dist_sum = 0.0;
    double hop_sum = 0.0;
    for (std::size_t j = 0; j < anchors.size(); ++j) {
      if (i == j || hops[i][j] == HopTable::kUnreachable) continue;
      dist_sum += distance(anchors[i], anchors[j]);
      hop_sum += hops[i][j];
    }
    if (hop_sum > 0.0 && dist_sum > 0.0) out[i] = AvgHopSize{dist_sum / hop_sum};
  }
  return out;
}

Point2D multilaterate(std::span<const Point2D> anchors, std::span<const double> distances,
                      const MultilaterationOptions& options) {
  if (anchors.size() < 3) throw ArityError("multilaterate: need at least 3 anchors");
  if (anchors.size() != distances.size()) {
    throw ArityError("multilaterate: anchor and distance counts differ");
  }
  for (double d : distances) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      throw std::invalid_argument("multilaterate: distances must be finite and >= 0");
    }
  }

  const Point2D& ref = anchors.back();
  const double ref_d = distances.back();
  const double ref_norm = ref.x * ref.x + ref.y * ref.y;
  const double s = 1.0 / (2.0 * options.scale_length_m);

  // Row i: 2(x_i - x_r) x + 2(y_i - y_r) y = d_r^2 - d_i^2 + |p_i|^2 - |p_r|^2,
  // multiplied through by s.
  double ata00 = 0.0;
  double ata01 = 0.0;
  double ata11 = 0.0;
  double atb0 = 0.0;
  double atb1 = 0.0;
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    const Point2D& p = anchors[i];
    const double a0 = 2.0 * (p.x - ref.x) * s;
    const double a1 = 2.0 * (p.y - ref.y) * s;
    const double b =
        (ref_d * ref_d - distances[i] * distances[i] + p.x * p.x + p.y * p.y - ref_norm) * s;
    ata00 += a0 * a0;
    ata01 += a0 * a1;
    ata11 += a1 * a1;
    atb0 += a0 * b;
    atb1 += a1 * b;
  }
  const double det = ata00 * ata11 - ata01 * ata01;
  if (!(std::abs(det) >= options.collinear_tolerance)) {
    throw CollinearAnchors("multilaterate: anchors are collinear (det " + std::to_string(det) +
                           ")");
  }
  const double x = (ata11 * atb0 - ata01 * atb1) / det;
  const double y = (ata00 * atb1 - ata01 * atb0) / det;
  return {x, y};
}

DvHopContext DvHopContext::build(std::span<const Point2D> anchors, const HopTable& hops,
                                 HopSizeMode mode) {
  check_anchor_span(anchors, hops);
  DvHopContext ctx;
  ctx.mode = mode;
  const auto matrix = anchor_hop_matrix(hops);
  if (mode == HopSizeMode::Global) {
    ctx.global = dvhop_avg_hop_size_reachable(anchors, matrix);
  } else {
    ctx.per_anchor = dvhop_per_anchor_hop_sizes(anchors, matrix);
  }
  return ctx;
}

std::optional<AvgHopSize> hop_size_for_node(std::size_t node, const HopTable& hops,
                                            const DvHopContext& context) {
  if (context.mode == HopSizeMode::Global) return context.global;
  std::optional<AvgHopSize> best;
  std::int32_t best_hops = std::numeric_limits<std::int32_t>::max();
  for (std::size_t k = 0; k < hops.anchor_count(); ++k) {
    const std::int32_t h = hops.raw(node, k);
    if (h == HopTable::kUnreachable || k >= context.per_anchor.size() ||
        !context.per_anchor[k]) {
      continue;
    }
    if (h < best_hops) {
      best_hops = h;
      best = context.per_anchor[k];
    }
  }
  return best;
}

LocalizeResult dvhop_localize(std::size_t node, std::span<const Point2D> anchors,
                              const HopTable& hops, AvgHopSize hop_size,
                              const MultilaterationOptions& options) {
  check_anchor_span(anchors, hops);
  const Reachable r = reachable_anchors(node, hops);
  if (r.anchor_index.size() < 3) return Unlocalizable{Unlocalizable::Reason::TooFewAnchors};

  std::vector<Point2D> used;
  std::vector<double> dists;
  used.reserve(r.anchor_index.size());
  dists.reserve(r.anchor_index.size());
  for (std::size_t i = 0; i < r.anchor_index.size(); ++i) {
    used.push_back(anchors[r.anchor_index[i]]);
    dists.push_back(r.hops[i] * hop_size.meters_per_hop);
  }
  try {
    const Point2D p = multilaterate(used, dists, options);
    return Estimate{p, used.size(), mean_of(r.hops)};
  } catch (const CollinearAnchors&) {
    return Unlocalizable{Unlocalizable::Reason::CollinearAnchors};
  }
}

LocalizeResult dvhop_localize(std::size_t node, std::span<const Point2D> anchors,
                              const HopTable& hops, const DvHopContext& context,
                              const MultilaterationOptions& options) {
  const auto size = hop_size_for_node(node, hops, context);
  if (!size) return Unlocalizable{Unlocalizable::Reason::NoHopSize};
  return dvhop_localize(node, anchors, hops, *size, options);
}

std::vector<double> grl_weights(std::span<const std::int32_t> hop_counts) {
  std::vector<double> w;
  w.reserve(hop_counts.size());
  for (auto h : hop_counts) {
    if (h < 0) throw std::invalid_argument("grl_weights: hop counts must be >= 0");
    w.push_back(std::pow(kPhi, -static_cast<double>(h)));
  }
  return w;
}

LocalizeResult grl_localize(std::size_t node, std::span<const Point2D> anchors,
                            const HopTable& hops) {
  check_anchor_span(anchors, hops);
  const Reachable r = reachable_anchors(node, hops);
  if (r.anchor_index.empty()) return Unlocalizable{Unlocalizable::Reason::NoAnchorInRange};

  const auto w = grl_weights(r.hops);
  double sw = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Point2D& a = anchors[r.anchor_index[i]];
    sw += w[i];
    sx += w[i] * a.x;
    sy += w[i] * a.y;
  }
  return Estimate{{sx / sw, sy / sw}, w.size(), mean_of(r.hops)};
}

}  // namespace wsnloc
