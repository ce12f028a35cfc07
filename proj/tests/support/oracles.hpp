#pragma once

// Test-only reference implementations. None of these call into the
// library code they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "wsnloc/core.hpp"

namespace wsnloc::oracle {

inline double euclid(double ax, double ay, double bx, double by) {
  const double dx = ax - bx;
  const double dy = ay - by;
  return std::sqrt(dx * dx + dy * dy);
}

/// All-pairs unweighted shortest paths; -1 where no path exists.
inline std::vector<std::vector<std::int32_t>> floyd_warshall(
    const std::vector<std::vector<bool>>& adjacency) {
  const std::size_t n = adjacency.size();
  constexpr std::int64_t inf = std::numeric_limits<std::int32_t>::max();
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && adjacency[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] < inf && d[k][j] < inf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  std::vector<std::vector<std::int32_t>> out(n, std::vector<std::int32_t>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] < inf) out[i][j] = static_cast<std::int32_t>(d[i][j]);
    }
  }
  return out;
}

/// Unit-disk adjacency by direct pairwise distance.
inline std::vector<std::vector<bool>> unit_disk(const std::vector<Point2D>& pts, double range) {
  std::vector<std::vector<bool>> adj(pts.size(), std::vector<bool>(pts.size(), false));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      adj[i][j] = i != j && euclid(pts[i].x, pts[i].y, pts[j].x, pts[j].y) <= range;
    }
  }
  return adj;
}

inline double min_pairwise_distance(const std::vector<Point2D>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, euclid(pts[i].x, pts[i].y, pts[j].x, pts[j].y));
    }
  }
  return best;
}

/// Distance from p to segment ab.
inline double segment_distance(const Point2D& p, const Point2D& a, const Point2D& b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return euclid(p.x, p.y, a.x + t * vx, a.y + t * vy);
}

/// Inside or within `slack` of the convex hull of `pts` (gift wrapping).
inline bool in_convex_hull(const Point2D& p, std::vector<Point2D> pts, double slack) {
  if (pts.empty()) return false;
  std::sort(pts.begin(), pts.end(), [](const Point2D& a, const Point2D& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return euclid(p.x, p.y, pts[0].x, pts[0].y) <= slack;
  auto cross = [](const Point2D& o, const Point2D& a, const Point2D& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  // Andrew's monotone chain.
  std::vector<Point2D> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& q : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], q) <= 0) --k;
    hull[k++] = q;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  double nearest_edge = std::numeric_limits<double>::infinity();
  bool inside = hull.size() >= 3;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    nearest_edge = std::min(nearest_edge, segment_distance(p, a, b));
    if (cross(a, b, p) < 0) inside = false;
  }
  return inside || nearest_edge <= slack;
}

}  // namespace wsnloc::oracle
