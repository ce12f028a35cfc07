#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wsnloc/deployment.hpp"

using namespace wsnloc;

namespace {
const FieldSpec kField{100, 100};

bool all_inside(const std::vector<Point2D>& pts, const FieldSpec& f) {
  return std::all_of(pts.begin(), pts.end(), [&](const Point2D& p) { return f.contains(p); });
}

bool on_boundary(const Point2D& p, const FieldSpec& f) {
  return p.x == 0.0 || p.y == 0.0 || p.x == f.width || p.y == f.height;
}
}  // namespace

TEST_CASE("uniform unknown deployment") {
  RngStream a(99);
  RngStream b(99);
  const auto pts = deploy_unknowns_uniform(kField, 100, a);
  CHECK(pts.size() == 100);
  CHECK(all_inside(pts, kField));
  CHECK(pts == deploy_unknowns_uniform(kField, 100, b));

  SUBCASE("quadrant counts within the binomial 4-sigma band") {
    RngStream rng(5);
    const auto many = deploy_unknowns_uniform(kField, 10000, rng);
    std::array<int, 4> q{};
    for (const auto& p : many) q[(p.x >= 50 ? 1 : 0) + (p.y >= 50 ? 2 : 0)]++;
    for (int c : q) {
      CHECK(c >= 2300);
      CHECK(c <= 2700);
    }
  }

  CHECK_THROWS_AS(deploy_unknowns_uniform(kField, 0, a), std::invalid_argument);
}

TEST_CASE("phi chain") {
  SUBCASE("single anchor at the center") {
    CHECK(deploy_anchors_phi_chain(kField, 1, 2.0) == std::vector<Point2D>{{50, 50}});
  }
  SUBCASE("three anchors: chord ratio is phi") {
    const auto p = deploy_anchors_phi_chain(kField, 3, 2.0);
    CHECK(distance(p[0], p[1]) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(distance(p[1], p[2]) == doctest::Approx(3.2360679774997897).epsilon(1e-12));
    CHECK(std::abs(distance(p[1], p[2]) / distance(p[0], p[1]) - kPhi) < 1e-9);
  }
  SUBCASE("ten anchors: in field, tail clamped") {
    const auto p = deploy_anchors_phi_chain(kField, 10, 2.0);
    CHECK(p.size() == 10);
    CHECK(all_inside(p, kField));
    CHECK(on_boundary(p.back(), kField));
    // Pre-clamp the 10th anchor sits at x ~ 112.6 m.
    const auto raw = phi_chain_unclamped(kField, 10, 2.0);
    CHECK(raw.back().x == doctest::Approx(112.62).epsilon(1e-3));
    CHECK(p.back().x == 100.0);
  }
  SUBCASE("ratio holds on every unclamped triple") {
    for (double d1 : {0.5, 1.0, 2.0, 3.0}) {
      const auto raw = phi_chain_unclamped(kField, 12, d1);
      const auto clamped = deploy_anchors_phi_chain(kField, 12, d1);
      for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
        if (raw[i - 1] != clamped[i - 1] || raw[i] != clamped[i] || raw[i + 1] != clamped[i + 1]) {
          continue;
        }
        CHECK(std::abs(distance(clamped[i], clamped[i + 1]) / distance(clamped[i - 1], clamped[i]) -
                       kPhi) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(deploy_anchors_phi_chain(kField, 3, 0.0), std::invalid_argument);
}

TEST_CASE("sunflower") {
  CHECK(deploy_anchors_sunflower(kField, 1, 10.0) == std::vector<Point2D>{{50, 50}});

  const auto two = deploy_anchors_sunflower(kField, 2, 10.0);
  CHECK(std::abs(distance(two[1], kField.center()) - 10.0) < 1e-9);

  const auto ten = deploy_anchors_sunflower(kField, 10, 14.0);
  CHECK(all_inside(ten, kField));
  // Brute-force minimum pairwise separation is 14.0 m (anchors 0 and 1).
  CHECK(oracle::min_pairwise_distance(ten) > 8.0);
  CHECK(oracle::min_pairwise_distance(ten) == doctest::Approx(14.0).epsilon(1e-9));

  SUBCASE("angular increments equal the golden angle") {
    const auto pts = deploy_anchors_sunflower(kField, 10, default_sunflower_scale(kField, 10));
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      const double a0 = std::atan2(pts[i].y - 50, pts[i].x - 50);
      const double a1 = std::atan2(pts[i + 1].y - 50, pts[i + 1].x - 50);
      double step = std::remainder(a1 - a0 - kGoldenAngle, 2 * std::numbers::pi);
      CHECK(std::abs(step) < 1e-12);
    }
  }
  SUBCASE("default scale fills the field") {
    CHECK(default_sunflower_scale(kField, 10) == doctest::Approx(50.0 / std::sqrt(10.0)));
    const auto pts = deploy_anchors_sunflower(kField, 10, default_sunflower_scale(kField, 10));
    CHECK(distance(pts.back(), kField.center()) == doctest::Approx(50.0 * std::sqrt(0.9)));
  }
}

TEST_CASE("grid") {
  const std::vector<Point2D> four{{25, 25}, {75, 25}, {25, 75}, {75, 75}};
  CHECK(deploy_anchors_grid(kField, 4) == four);
  CHECK(deploy_anchors_grid(kField, 1) == std::vector<Point2D>{{50, 50}});

  const auto ten = deploy_anchors_grid(kField, 10);
  CHECK(ten.size() == 10);
  CHECK(all_inside(ten, kField));
  CHECK(ten[0] == Point2D{12.5, 100.0 / 6.0});

  SUBCASE("perfect squares are symmetric under a quarter turn") {
    for (std::size_t k : {1u, 4u, 9u, 16u, 25u}) {
      auto pts = deploy_anchors_grid(kField, k);
      std::vector<Point2D> turned;
      for (const auto& p : pts) turned.push_back({100.0 - p.y, p.x});
      for (const auto& t : turned) {
        const bool found = std::any_of(pts.begin(), pts.end(),
                                       [&](const Point2D& p) { return distance(p, t) < 1e-9; });
        CHECK(found);
      }
    }
  }
}

TEST_CASE("random anchors are reproducible") {
  RngStream a(11);
  RngStream b(11);
  CHECK(deploy_anchors_random(kField, 10, a) == deploy_anchors_random(kField, 10, b));
}

TEST_CASE("place_anchors dispatches and returns count in-field points") {
  RngStream rng(3);
  const FieldSpec f{80, 40};
  for (const AnchorLayout& layout : std::vector<AnchorLayout>{
           RandomLayout{}, GridLayout{}, PhiChainLayout{2.0}, SunflowerLayout{}}) {
    for (std::size_t count : {1u, 3u, 10u, 37u}) {
      const auto pts = place_anchors(layout, f, count, rng);
      CHECK(pts.size() == count);
      CHECK(all_inside(pts, f));
    }
  }
  CHECK(layout_kind_name(SunflowerLayout{}) == "golden_angle_sunflower");
  CHECK(layout_kind_name(PhiChainLayout{}) == "phi_chain_spiral");
}
