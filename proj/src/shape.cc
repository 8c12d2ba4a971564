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

#include <algorithm>
#include <limits>

namespace ccsduet {
namespace {

SupportResult polygon_support(const std::vector<Point>& v, Angle theta,
                              Point offset, double radius) {
  const Point u = theta.unit();
  size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i) {
    const double d = Dot(v[i], u);
    if (d > best_value) {
      best_value = d;
      best = i;
    }
  }
  SupportResult out;
  out.first = v[best] + offset + radius * u;
  out.second = out.first;
  if (v.size() < 2) return out;
  const double scale = std::max(1.0, std::abs(best_value));
  const size_t next = (best + 1) % v.size();
  const size_t prev = (best + v.size() - 1) % v.size();
  // Ties mean theta is the normal of an edge at `best`.
  if (std::abs(Dot(v[next], u) - best_value) <= 1e-12 * scale) {
    out.second = v[next] + offset + radius * u;
    out.is_edge = true;
  } else if (std::abs(Dot(v[prev], u) - best_value) <= 1e-12 * scale) {
    out.second = out.first;
    out.first = v[prev] + offset + radius * u;
    out.is_edge = true;
  }
  return out;
}

double max_norm(const std::vector<Point>& v) {
  double m = 0.0;
  for (const Point& p : v) m = std::max(m, Norm(p));
  return m;
}

}  // namespace

CcsShape CcsShape::Disc(double radius) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw InputError("disc radius must be positive and finite");
  }
  CcsShape s;
  s.kind_ = Kind::kDisc;
  s.radius_ = radius;
  return s;
}

CcsShape CcsShape::Polygon(std::vector<Point> v, const TolerancePolicy& tol) {
  const size_t n = v.size();
  if (n < 4 || n % 2 != 0) {
    throw InputError("polygon needs an even number of at least 4 vertices");
  }
  for (const Point& p : v) {
    if (!IsFinite(p)) throw InputError("polygon vertex is not finite");
  }
  const double scale = std::max(1.0, max_norm(v));
  double area2 = 0.0;
  double turning = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % n];
    const Point c = v[(i + 2) % n];
    const Point e1 = b - a;
    const Point e2 = c - b;
    if (Norm(e1) <= tol.eps_length) {
      throw InputError("polygon has repeated vertices");
    }
    if (Cross(e1, e2) < -tol.eps_length * scale * scale) {
      throw InputError("polygon is not convex and counter-clockwise");
    }
    turning += std::atan2(Cross(e1, e2), Dot(e1, e2));
    area2 += Cross(a, b);
  }
  if (area2 <= tol.eps_length * scale * scale) {
    throw InputError("polygon has no positive area");
  }
  // A convex CCW loop turns exactly once.
  if (std::abs(turning - kTwoPi) > 1e-6) {
    throw InputError("polygon is not simple");
  }
  for (size_t i = 0; i < n / 2; ++i) {
    if (Norm(v[i] + v[i + n / 2]) > tol.eps_length * scale) {
      throw InputError("polygon is not centrally symmetric about its centre");
    }
  }
  CcsShape s;
  s.kind_ = Kind::kPolygon;
  s.vertices_ = std::move(v);
  return s;
}

double CcsShape::reach(Angle theta) const {
  if (is_disc()) return radius_;
  const Point u = theta.unit();
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& p : vertices_) best = std::max(best, Dot(p, u));
  return best;
}

SupportResult CcsShape::support_point(Angle theta) const {
  if (is_disc()) {
    const Point p = radius_ * theta.unit();
    return {p, p, false};
  }
  return polygon_support(vertices_, theta, {0.0, 0.0}, 0.0);
}

CcsShape CcsShape::transformed(const RigidTransform& t) const {
  CcsShape out = *this;
  for (Point& p : out.vertices_) p = t.apply_linear(p);
  if (t.flipped) std::reverse(out.vertices_.begin(), out.vertices_.end());
  return out;
}

Angle OrientationResult::value() const {
  return Angle(interval.start.value() + 0.5 * interval.width());
}

SumBoundary::SumBoundary(std::vector<Point> core, double radius, Point center)
    : core_(std::move(core)), radius_(radius), center_(center) {
  if (core_.empty() || core_.size() == 2) {
    throw InvariantError("sum core must be a point or a polygon");
  }
  if (core_.size() == 1 && radius_ <= 0.0) {
    throw InvariantError("sum of two points has no interior");
  }
  build_features();
}

void SumBoundary::build_features() {
  features_.clear();
  const double r = radius_;
  if (core_.size() == 1) {
    BoundaryFeature f;
    f.kind = BoundaryFeature::Kind::kArc;
    f.center = center_ + core_[0];
    f.radius = r;
    f.from_angle = Angle(0.0);
    f.to_angle = Angle(0.0);
    f.from = f.center + r * f.from_angle.unit();
    f.to = f.from;
    f.normal_range = AngularInterval::Full();
    f.length = kTwoPi * r;
    features_.push_back(f);
    perimeter_ = f.length;
    normal_origin_ = Angle(0.0);
    normal_offsets_ = {0.0};
    return;
  }
  const size_t n = core_.size();
  std::vector<Angle> normal(n);
  for (size_t k = 0; k < n; ++k) {
    normal[k] = Angle(AngleOf(RightPerp(core_[(k + 1) % n] - core_[k])));
  }
  double s = 0.0;
  for (size_t k = 0; k < n; ++k) {
    const Angle before = normal[(k + n - 1) % n];
    const Angle after = normal[k];
    const Point v = center_ + core_[k];
    BoundaryFeature arc;
    arc.kind = BoundaryFeature::Kind::kArc;
    arc.center = v;
    arc.radius = r;
    arc.from_angle = before;
    arc.to_angle = after;
    arc.from = v + r * before.unit();
    arc.to = v + r * after.unit();
    arc.normal_range = {before, after, false};
    arc.length = r * ccw_delta(before, after);
    arc.start_s = s;
    s += arc.length;
    features_.push_back(arc);

    BoundaryFeature seg;
    seg.kind = BoundaryFeature::Kind::kSegment;
    seg.from = v + r * after.unit();
    seg.to = center_ + core_[(k + 1) % n] + r * after.unit();
    seg.normal_range = AngularInterval::Single(after);
    seg.from_angle = after;
    seg.to_angle = after;
    seg.length = Distance(seg.from, seg.to);
    seg.start_s = s;
    s += seg.length;
    features_.push_back(seg);
  }
  perimeter_ = s;
  normal_origin_ = normal[n - 1];
  normal_offsets_.clear();
  for (const BoundaryFeature& f : features_) {
    double o = ccw_delta(normal_origin_, f.normal_range.start);
    // The closing edge's normal is the origin itself.
    if (!normal_offsets_.empty() && o < normal_offsets_.back()) o += kTwoPi;
    normal_offsets_.push_back(o);
  }
}

SumBoundary SumBoundary::placed_at(Point center) const {
  return SumBoundary(core_, radius_, center);
}

SumBoundary SumBoundary::transformed(const RigidTransform& t) const {
  std::vector<Point> core = core_;
  for (Point& p : core) p = t.apply_linear(p);
  if (t.flipped) std::reverse(core.begin(), core.end());
  return SumBoundary(std::move(core), radius_, apply_transform(t, center_));
}

size_t SumBoundary::feature_for_normal(Angle theta) const {
  const double offset = ccw_delta(normal_origin_, theta);
  auto it = std::upper_bound(normal_offsets_.begin(), normal_offsets_.end(),
                             offset);
  if (it == normal_offsets_.begin()) return 0;
  return static_cast<size_t>(std::distance(normal_offsets_.begin(), it) - 1);
}

double SumBoundary::relative_reach(Angle theta) const {
  const BoundaryFeature& f = features_[feature_for_normal(theta)];
  const Point u = theta.unit();
  if (f.kind == BoundaryFeature::Kind::kArc) {
    return Dot(f.center - center_, u) + radius_;
  }
  return Dot(f.from - center_, u);
}

double SumBoundary::reach(Angle theta) const {
  return relative_reach(theta) + Dot(center_, theta.unit());
}

SupportResult SumBoundary::support_point(Angle theta) const {
  return polygon_support(core_, theta, center_, radius_);
}

double SumBoundary::signed_distance(Point p) const {
  return signed_distance_convex(p - center_, core_) - radius_;
}

bool SumBoundary::contains(Point p, bool closed, double eps) const {
  const double d = signed_distance(p);
  return closed ? d <= eps : d < -eps;
}

OrientationResult SumBoundary::orientation_at(Point p, double eps) const {
  const Point q = p - center_;
  const double core_distance = signed_distance_convex(q, core_);
  if (core_distance - radius_ < -eps) {
    throw NonViableError("configuration is inside the forbidden region");
  }
  if (core_.size() == 1) {
    const Point d = q - core_[0];
    if (Norm(d) <= 0.0) throw InvariantError("orientation is undefined");
    return {AngularInterval::Single(Angle(AngleOf(d)))};
  }
  const size_t n = core_.size();
  // Nearest core edge and parameter.
  size_t edge = 0;
  double t_best = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < n; ++k) {
    double t = 0.0;
    const double d = distance_to_segment(q, core_[k], core_[(k + 1) % n], &t);
    if (d < best) {
      best = d;
      edge = k;
      t_best = t;
    }
  }
  const Point a = core_[edge];
  const Point b = core_[(edge + 1) % n];
  const Point nearest = a + t_best * (b - a);
  if (core_distance > eps) {
    return {AngularInterval::Single(Angle(AngleOf(q - nearest)))};
  }
  // q is on the core boundary: the region has sharp corners here.
  auto edge_normal = [&](size_t k) {
    return Angle(AngleOf(RightPerp(core_[(k + 1) % n] - core_[k])));
  };
  for (size_t k = 0; k < n; ++k) {
    if (Distance(q, core_[k]) <= eps) {
      return {{edge_normal((k + n - 1) % n), edge_normal(k), false}};
    }
  }
  return {AngularInterval::Single(edge_normal(edge))};
}

size_t SumBoundary::feature_at(double s) const {
  s = std::fmod(s, perimeter_);
  if (s < 0.0) s += perimeter_;
  auto it = std::upper_bound(
      features_.begin(), features_.end(), s,
      [](double value, const BoundaryFeature& f) { return value < f.start_s; });
  if (it == features_.begin()) return 0;
  return static_cast<size_t>(std::distance(features_.begin(), it) - 1);
}

Point SumBoundary::point_at(double s) const {
  s = std::fmod(s, perimeter_);
  if (s < 0.0) s += perimeter_;
  const BoundaryFeature& f = features_[feature_at(s)];
  const double local = std::clamp(s - f.start_s, 0.0, f.length);
  if (f.length <= 0.0) return f.from;
  if (f.kind == BoundaryFeature::Kind::kSegment) {
    return f.from + (local / f.length) * (f.to - f.from);
  }
  return f.center + f.radius * UnitVector(f.from_angle.value() + local / f.radius);
}

double SumBoundary::locate(Point p, double* distance) const {
  double best = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  for (const BoundaryFeature& f : features_) {
    double d = 0.0;
    double s = f.start_s;
    if (f.kind == BoundaryFeature::Kind::kSegment) {
      double t = 0.0;
      d = distance_to_segment(p, f.from, f.to, &t);
      s = f.start_s + t * f.length;
    } else {
      if (f.length <= 0.0) continue;
      const Point rel = p - f.center;
      const double offset =
          Norm(rel) > 0.0 ? ccw_delta(f.from_angle, Angle(AngleOf(rel))) : 0.0;
      const double width = f.normal_range.width();
      if (offset <= width) {
        d = std::abs(Norm(rel) - f.radius);
        s = f.start_s + f.radius * offset;
      } else {
        const double d_from = Distance(p, f.from);
        const double d_to = Distance(p, f.to);
        d = std::min(d_from, d_to);
        s = d_from <= d_to ? f.start_s : f.start_s + f.length;
      }
    }
    if (d < best) {
      best = d;
      best_s = s;
    }
  }
  if (distance) *distance = best;
  best_s = std::fmod(best_s, perimeter_);
  if (best_s < 0.0) best_s += perimeter_;
  return best_s;
}

std::vector<SupportTerm> SumBoundary::support_terms(
    const std::optional<AngularInterval>& normals, bool gated) const {
  const AngularInterval range = normals ? *normals : AngularInterval::Full();
  std::vector<SupportTerm> out;
  for (const BoundaryFeature& f : features_) {
    if (f.kind != BoundaryFeature::Kind::kArc) continue;
    for (const AngularInterval& piece :
         interval_intersection(f.normal_range, range)) {
      if (radius_ > 0.0 && !piece.is_single()) {
        out.push_back(SupportTerm::FromArc(f.center, radius_, piece));
      }
      if (piece.full) continue;
      SupportTerm first = SupportTerm::FromPoint(f.center + radius_ * piece.start.unit());
      SupportTerm last = SupportTerm::FromPoint(f.center + radius_ * piece.end.unit());
      if (gated) {
        first.domain = piece;
        last.domain = piece;
      }
      out.push_back(first);
      out.push_back(last);
    }
  }
  return out;
}

SumBoundary minkowski_sum(const CcsShape& a, const CcsShape& b, Point center,
                          const TolerancePolicy& tol) {
  const std::vector<Point> origin = {{0.0, 0.0}};
  const std::vector<Point>& va = a.is_disc() ? origin : a.vertices();
  const std::vector<Point>& vb = b.is_disc() ? origin : b.vertices();
  double radius = 0.0;
  if (a.is_disc()) radius += a.radius();
  if (b.is_disc()) radius += b.radius();
  std::vector<Point> sums;
  sums.reserve(va.size() * vb.size());
  for (const Point& p : va) {
    for (const Point& q : vb) sums.push_back(p + q);
  }
  std::vector<Point> core = convex_hull(sums, tol.eps_length);
  return SumBoundary(std::move(core), radius, center);
}

double reach(const CcsShape& shape, Angle theta) { return shape.reach(theta); }
double reach(const SumBoundary& sum, Angle theta) { return sum.reach(theta); }

SupportResult support_point(const CcsShape& shape, Angle theta) {
  return shape.support_point(theta);
}
SupportResult support_point(const SumBoundary& sum, Angle theta) {
  return sum.support_point(theta);
}

bool contains(const SumBoundary& sum, Point p, bool closed,
              const TolerancePolicy& tol) {
  return sum.contains(p, closed, tol.eps_length);
}

double separation(const CcsShape& a, Point pos_a, const CcsShape& b,
                  Point pos_b) {
  return minkowski_sum(a, b, pos_b).signed_distance(pos_a);
}

OrientationResult orientation(const CcsShape& a, Point pos_a,
                              const CcsShape& b, Point pos_b,
                              const TolerancePolicy& tol) {
  return minkowski_sum(a, b, pos_b, tol).orientation_at(pos_a, tol.eps_length);
}

std::vector<BoundaryFeature> walk_pieces(const SumBoundary& sum, double from_s,
                                         double length, Turn direction) {
  const double per = sum.perimeter();
  std::vector<BoundaryFeature> out;
  if (length <= 0.0) return out;
  // CW walks are CCW walks over the same stretch, reversed afterwards.
  double lo_s = direction == Turn::kCcw ? from_s : from_s - length;
  lo_s = std::fmod(lo_s, per);
  if (lo_s < 0.0) lo_s += per;
  const double hi_s = lo_s + length;
  const double min_piece = 1e-14 * std::max(1.0, per);
  for (int lap = 0; lap < 3; ++lap) {
    for (const BoundaryFeature& f : sum.features()) {
      const double a = f.start_s + lap * per;
      const double b = a + f.length;
      const double lo = std::max(a, lo_s);
      const double hi = std::min(b, hi_s);
      if (hi - lo <= min_piece) continue;
      BoundaryFeature piece = f;
      piece.start_s = std::fmod(lo, per);
      piece.length = hi - lo;
      if (f.kind == BoundaryFeature::Kind::kSegment) {
        piece.from = sum.point_at(lo);
        piece.to = sum.point_at(hi);
        piece.length = Distance(piece.from, piece.to);
      } else {
        const double start = f.from_angle.value() + (lo - a) / f.radius;
        const double width = (hi - lo) / f.radius;
        piece.from_angle = Angle(start);
        piece.to_angle = Angle(start + width);
        piece.normal_range = AngularInterval::FromWidth(piece.from_angle, width);
        piece.from = f.center + f.radius * piece.from_angle.unit();
        piece.to = f.center + f.radius * piece.to_angle.unit();
      }
      out.push_back(piece);
    }
  }
  if (direction == Turn::kCw) {
    std::reverse(out.begin(), out.end());
    for (BoundaryFeature& p : out) p.reversed = true;
  }
  return out;
}

BoundaryWalk boundary_walk(const SumBoundary& sum, Point from, Point to,
                           Turn direction, const TolerancePolicy& tol) {
  double d0 = 0.0;
  double d1 = 0.0;
  const double s0 = sum.locate(from, &d0);
  const double s1 = sum.locate(to, &d1);
  const double slack = tol.eps_length * std::max(1.0, sum.perimeter());
  if (d0 > slack || d1 > slack) {
    throw InputError("walk endpoint is not on the boundary");
  }
  const double per = sum.perimeter();
  BoundaryWalk walk;
  walk.from_s = s0;
  walk.to_s = s1;
  walk.direction = direction;
  if (Distance(from, to) > tol.eps_length) {
    double len = direction == Turn::kCcw ? s1 - s0 : s0 - s1;
    len = std::fmod(len, per);
    if (len < 0.0) len += per;
    walk.length = len;
  }
  walk.pieces = walk_pieces(sum, s0, walk.length, direction);
  return walk;
}

}  // namespace ccsduet
