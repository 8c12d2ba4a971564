// Copyright 2026 The CCS Duet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccsduet/shape.h"

#include <random>

#include "doctest.h"
#include "test_util.h"

namespace ccsduet {
namespace {

using testing::RandomShape;
using testing::ShapeReach;
using testing::Square;

// Max over sampled directions of the half-plane signed distance. Equals the
// separation for exterior points and approximates it from above inside.
// Edge normals of both bodies are added to the samples, since the maximum
// sits on one of them whenever the nearest feature is an edge.
double HalfPlaneSeparation(const CcsShape& a, const CcsShape& b, Point d, int samples,
                           double* argmax = nullptr) {
  std::vector<double> dirs;
  for (int i = 0; i < samples; ++i) dirs.push_back(kTwoPi * i / samples);
  for (const CcsShape* s : {&a, &b}) {
    const auto& v = s->vertices();
    for (size_t i = 0; i < v.size(); ++i) {
      const Point e = v[(i + 1) % v.size()] - v[i];
      dirs.push_back(Angle(std::atan2(-e.x, e.y)).value());
    }
  }
  double best = -1e300;
  for (double t : dirs) {
    const double v = Dot(d, UnitVector(t)) - ShapeReach(a, t) - ShapeReach(b, t);
    if (v > best) {
      best = v;
      if (argmax) *argmax = t;
    }
  }
  return best;
}

TEST_CASE("reach and support examples") {
  const CcsShape disc = CcsShape::Disc(2.0);
  CHECK(reach(disc, Angle(1.3)) == 2.0);
  const CcsShape sq = Square(1.0);
  CHECK(reach(sq, Angle(0.0)) == doctest::Approx(1.0));
  CHECK(reach(sq, Angle(kPi / 4)) == doctest::Approx(std::sqrt(2.0)));

  const SupportResult d = support_point(CcsShape::Disc(1.0), Angle(0.0));
  CHECK(d.first.x == doctest::Approx(1.0));
  CHECK_FALSE(d.is_edge);
  const SupportResult corner = support_point(sq, Angle(kPi / 4));
  CHECK(corner.first == Point{1, 1});
  CHECK_FALSE(corner.is_edge);
  const SupportResult edge = support_point(sq, Angle(0.0));
  REQUIRE(edge.is_edge);
  CHECK(edge.first == Point{1, -1});
  CHECK(edge.second == Point{1, 1});
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(CcsShape::Disc(0.0), InputError);
  CHECK_THROWS_AS(CcsShape::Polygon({{-1, -1}, {1, -1}, {1, 1}}), InputError);
  // Clockwise.
  CHECK_THROWS_AS(CcsShape::Polygon({{-1, 1}, {1, 1}, {1, -1}, {-1, -1}}), InputError);
  // Not symmetric about the origin.
  CHECK_THROWS_AS(CcsShape::Polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}), InputError);
  CHECK_THROWS_AS(CcsShape::Polygon({{-1, -1}, {1, -1.2}, {1, 1}, {-1, 1}}), InputError);
  CHECK_NOTHROW(CcsShape::Polygon({{-2, -1}, {2, -1}, {2, 1}, {-2, 1}}));
}

TEST_CASE("minkowski_sum examples") {
  const SumBoundary circle = minkowski_sum(CcsShape::Disc(1), CcsShape::Disc(2), {0, 0});
  CHECK(circle.radius() == 3.0);
  CHECK(circle.core().size() == 1);
  CHECK(circle.perimeter() == doctest::Approx(6 * kPi));

  const SumBoundary big = minkowski_sum(Square(1), Square(1), {0, 0});
  REQUIRE(big.core().size() == 4);
  CHECK(big.radius() == 0.0);
  for (const Point& p : big.core()) {
    CHECK(std::abs(p.x) == 2.0);
    CHECK(std::abs(p.y) == 2.0);
  }

  const SumBoundary rounded = minkowski_sum(Square(1), CcsShape::Disc(0.5), {0, 0});
  int segments = 0;
  int arcs = 0;
  for (const BoundaryFeature& f : rounded.features()) {
    if (f.kind == BoundaryFeature::Kind::kSegment) {
      ++segments;
      CHECK(f.length == doctest::Approx(2.0));
    } else {
      ++arcs;
      CHECK(f.radius == 0.5);
      CHECK(f.normal_range.width() == doctest::Approx(kPi / 2));
    }
  }
  CHECK(segments == 4);
  CHECK(arcs == 4);
  CHECK(rounded.perimeter() == doctest::Approx(8 + kPi));
  for (int i = 0; i < 360; ++i) {
    const double t = kTwoPi * i / 360;
    CHECK(rounded.reach(Angle(t)) ==
          doctest::Approx(ShapeReach(Square(1), t) + 0.5).epsilon(1e-12));
  }
}

TEST_CASE("sum boundaries of random shapes") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int trial = 0; trial < 60; ++trial) {
    const CcsShape a = RandomShape(rng, trial % 3 == 0);
    const CcsShape b = RandomShape(rng, trial % 4 == 1);
    const Point c{u(rng), u(rng)};
    const SumBoundary s = minkowski_sum(a, b, c);
    double feature_total = 0.0;
    for (size_t i = 0; i < s.features().size(); ++i) {
      const BoundaryFeature& f = s.features()[i];
      const BoundaryFeature& g = s.features()[(i + 1) % s.features().size()];
      CHECK(Distance(f.to, g.from) < 1e-9);
      feature_total += f.length;
    }
    CHECK(feature_total == doctest::Approx(s.perimeter()).epsilon(1e-12));
    std::vector<double> breaks;
    for (const BoundaryFeature& f : s.features()) breaks.push_back(f.normal_range.start.value());
    const double cauchy = integrate_circle(
        [&](double t) { return ShapeReach(a, t) + ShapeReach(b, t); }, breaks, 1e-10);
    CHECK(std::abs(cauchy - s.perimeter()) <= 1e-6 * s.perimeter());
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (int k = 0; k < 360; ++k) {
      const double t = ang(rng);
      const double expect = ShapeReach(a, t) + ShapeReach(b, t);
      CHECK(std::abs(s.relative_reach(Angle(t)) - expect) <= 1e-9);
      CHECK(std::abs(s.relative_reach(Angle(t + kPi)) - s.relative_reach(Angle(t))) <= 1e-9);
      CHECK(std::abs(s.reach(Angle(t)) - expect - Dot(c, UnitVector(t))) <= 1e-9);
      const SupportResult sp = s.support_point(Angle(t));
      CHECK(std::abs(Dot(sp.first, UnitVector(t)) - s.reach(Angle(t))) <= 1e-9);
      CHECK(std::abs(s.signed_distance(sp.first)) <= 1e-9);
    }
  }
}

TEST_CASE("contains examples") {
  const SumBoundary circle = minkowski_sum(CcsShape::Disc(1), CcsShape::Disc(2), {0, 0});
  CHECK(contains(circle, {0, 0}, true));
  CHECK(contains(circle, {3, 0}, true));
  CHECK_FALSE(contains(circle, {3, 0}, false));
  const SumBoundary rounded = minkowski_sum(Square(1), CcsShape::Disc(0.5), {0, 0});
  // Oracle: distance to the corner (1, 1) against the rounding radius.
  CHECK(contains(rounded, {1.3, 1.3}, false) == (Distance({1.3, 1.3}, {1, 1}) < 0.5));
  CHECK_FALSE(contains(rounded, {1.4, 1.4}, true));
}

TEST_CASE("open containment agrees with sampled half-plane separation") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  int checked = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const CcsShape a = RandomShape(rng, trial % 2 == 0);
    const CcsShape b = RandomShape(rng, trial % 3 == 0);
    const SumBoundary s = minkowski_sum(a, b, {0, 0});
    for (int k = 0; k < 100; ++k) {
      const Point p{u(rng), u(rng)};
      const double oracle = HalfPlaneSeparation(a, b, p, 3600);
      if (std::abs(oracle) < 1e-2) continue;
      ++checked;
      CHECK(contains(s, p, false) == (oracle < 0.0));
      CHECK((separation(a, p, b, {0, 0}) < 0.0) == contains(s, p, false));
      if (oracle > 0.0) CHECK(separation(a, p, b, {0, 0}) == doctest::Approx(oracle).epsilon(1e-4));
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("separation examples") {
  const CcsShape unit = CcsShape::Disc(1);
  CHECK(separation(unit, {3, 0}, unit, {0, 0}) == doctest::Approx(1.0));
  CHECK(separation(unit, {2, 0}, unit, {0, 0}) == doctest::Approx(0.0));
  CHECK(separation(unit, {1, 0}, unit, {0, 0}) == doctest::Approx(-1.0));
}

TEST_CASE("orientation examples") {
  const CcsShape unit = CcsShape::Disc(1);
  // (1, 1) would overlap; any viable point on the diagonal has the same answer.
  const OrientationResult diag = orientation(unit, {3, 3}, unit, {0, 0});
  CHECK(diag.value().value() == doctest::Approx(kPi / 4));
  const OrientationResult contact = orientation(unit, {2, 0}, unit, {0, 0});
  CHECK(contact.interval.is_single());
  CHECK(contact.value().value() == doctest::Approx(0.0));

  const OrientationResult sq = orientation(Square(1), {5, 0.3}, Square(1), {0, 0});
  double argmax = -1.0;
  HalfPlaneSeparation(Square(1), Square(1), {5, 0.3}, 3600, &argmax);
  CHECK(sq.interval.is_single());
  CHECK(sq.value().value() == doctest::Approx(0.0));
  CHECK(argmax == doctest::Approx(0.0));

  // Corner contact of a polygon sum reports the whole normal cone.
  const OrientationResult cone = orientation(Square(1), {2, 2}, Square(1), {0, 0});
  CHECK(cone.interval.start.value() == doctest::Approx(0.0));
  CHECK(cone.interval.width() == doctest::Approx(kPi / 2));

  CHECK_THROWS_AS(orientation(unit, {0.5, 0}, unit, {0, 0}), NonViableError);
}

TEST_CASE("orientation maximizes the half-plane separation") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const CcsShape a = RandomShape(rng, trial % 2 == 0);
    const CcsShape b = RandomShape(rng, trial % 5 == 0);
    const Point p{u(rng), u(rng)};
    if (separation(a, p, b, {0, 0}) < 0.05) continue;
    const OrientationResult o = orientation(a, p, b, {0, 0});
    const double t = o.value().value();
    const double at = Dot(p, UnitVector(t)) - ShapeReach(a, t) - ShapeReach(b, t);
    CHECK(at == doctest::Approx(separation(a, p, b, {0, 0})).epsilon(1e-9));
  }
}

TEST_CASE("boundary_walk examples") {
  const SumBoundary circle = minkowski_sum(CcsShape::Disc(0.5), CcsShape::Disc(0.5), {0, 0});
  const BoundaryWalk ccw = boundary_walk(circle, {1, 0}, {0, 1}, Turn::kCcw);
  CHECK(ccw.length == doctest::Approx(kPi / 2));
  REQUIRE(ccw.pieces.size() == 1);
  CHECK(ccw.pieces[0].kind == BoundaryFeature::Kind::kArc);
  const BoundaryWalk cw = boundary_walk(circle, {1, 0}, {0, 1}, Turn::kCw);
  CHECK(cw.length == doctest::Approx(3 * kPi / 2));
  CHECK_THROWS_AS(boundary_walk(circle, {1.1, 0}, {0, 1}, Turn::kCcw), InputError);

  const SumBoundary rounded = minkowski_sum(Square(1), CcsShape::Disc(0.5), {0, 0});
  const BoundaryWalk w = boundary_walk(rounded, {1.5, 0}, {0, 1.5}, Turn::kCcw);
  CHECK(w.length == doctest::Approx(2 + kPi / 4));
  REQUIRE(w.pieces.size() == 3);
  // Dense outline oracle: the same stretch of a 2000-sample polyline.
  std::vector<Point> dense = {{1.5, 0}};
  for (int i = 0; i <= 2000; ++i) {
    dense.push_back(Point{1, 1} + 0.5 * UnitVector(kPi / 2 * i / 2000));
  }
  dense.push_back({0, 1.5});
  double poly = 0.0;
  for (size_t i = 0; i + 1 < dense.size(); ++i) poly += Distance(dense[i], dense[i + 1]);
  CHECK(w.length == doctest::Approx(poly).epsilon(1e-6));
  const BoundaryWalk back = boundary_walk(rounded, {1.5, 0}, {0, 1.5}, Turn::kCw);
  CHECK(back.length + w.length == doctest::Approx(rounded.perimeter()));
  // CW pieces are listed in travel order.
  CHECK(Distance(back.pieces.front().to, Point{1.5, 0}) < 1e-12);
  CHECK(back.pieces.front().reversed);
}

TEST_CASE("boundary_walk is additive over waypoints") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const SumBoundary s =
        minkowski_sum(RandomShape(rng, trial % 2 == 0), RandomShape(rng, false), {1, -2});
    const double per = s.perimeter();
    const double s0 = frac(rng) * per;
    const double d1 = frac(rng) * 0.5 * per;
    const double d2 = frac(rng) * 0.5 * per;
    const Point p0 = s.point_at(s0);
    const Point p1 = s.point_at(s0 + d1);
    const Point p2 = s.point_at(s0 + d1 + d2);
    const double whole = boundary_walk(s, p0, p2, Turn::kCcw).length;
    const double parts =
        boundary_walk(s, p0, p1, Turn::kCcw).length + boundary_walk(s, p1, p2, Turn::kCcw).length;
    CHECK(whole == doctest::Approx(parts).epsilon(1e-9));
    CHECK(whole == doctest::Approx(d1 + d2).epsilon(1e-9));
    const auto pieces = walk_pieces(s, s0, d1 + d2, Turn::kCcw);
    double total = 0.0;
    for (const auto& p : pieces) total += p.length;
    CHECK(total == doctest::Approx(d1 + d2).epsilon(1e-9));
    CHECK(std::abs(s.signed_distance(p1)) < 1e-9);
  }
}

}  // namespace
}  // namespace ccsduet
