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

#include "ccsduet/geom.h"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace ccsduet {

Angle::Angle(double raw) {
  if (!std::isfinite(raw)) {
    throw InputError("angle is not finite");
  }
  double v = std::fmod(raw, kTwoPi);
  if (v < 0.0) v += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2pi.
  if (v >= kTwoPi || v == 0.0) v = 0.0;
  value_ = v;
}

Angle normalize_angle(double raw) { return Angle(raw); }

double ccw_delta(Angle from, Angle to) {
  double d = to.value() - from.value();
  if (d < 0.0) d += kTwoPi;
  return d;
}

bool angles_equal(Angle a, Angle b, double eps) {
  const double d = ccw_delta(a, b);
  return d <= eps || kTwoPi - d <= eps;
}

TolerancePolicy default_tolerance() {
  TolerancePolicy policy;
  if (const char* env = std::getenv("CCS_DUET_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v > 0.0) policy.eps_length = v;
  }
  return policy;
}

AngularInterval AngularInterval::FromWidth(Angle start, double width,
                                           double eps_angle) {
  if (width >= kTwoPi - eps_angle) return Full();
  return {start, Angle(start.value() + std::max(width, 0.0)), false};
}

AngularInterval AngularInterval::complement() const {
  if (full) return Single(start);
  if (is_single()) return Full();
  return {end, start, false};
}

bool interval_contains(const AngularInterval& interval, Angle theta,
                       double eps) {
  if (interval.full) return true;
  if (interval.width() >= kTwoPi - eps) return true;
  const double offset = ccw_delta(interval.start, theta);
  if (offset <= interval.width() + eps) return true;
  // Just clockwise of the start.
  return kTwoPi - offset <= eps;
}

std::vector<AngularInterval> interval_intersection(const AngularInterval& a,
                                                   const AngularInterval& b) {
  if (a.full) return {b};
  if (b.full) return {a};
  // Work in offsets from a.start, where a is [0, wa].
  const double wa = a.width();
  const double wb = b.width();
  const double s = ccw_delta(a.start, b.start);
  std::vector<AngularInterval> out;
  auto emit = [&](double lo, double hi) {
    if (hi < lo) return;
    out.push_back({Angle(a.start.value() + lo), Angle(a.start.value() + hi),
                   false});
  };
  // The part of b that wraps past 2pi, starting at offset 0.
  if (s + wb > kTwoPi) emit(0.0, std::min(wa, s + wb - kTwoPi));
  emit(s, std::min(wa, s + wb));
  return out;
}

Point RigidTransform::apply_linear(Point v) const {
  if (flipped) v.y = -v.y;
  const double c = std::cos(rotation.value());
  const double s = std::sin(rotation.value());
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

RigidTransform RigidTransform::inverse() const {
  RigidTransform inv;
  inv.flipped = flipped;
  inv.rotation = flipped ? rotation : Angle(-rotation.value());
  inv.translation = -inv.apply_linear(translation);
  return inv;
}

RigidTransform RigidTransform::compose(const RigidTransform& other) const {
  RigidTransform out;
  const double sign = flipped ? -1.0 : 1.0;
  out.rotation = Angle(rotation.value() + sign * other.rotation.value());
  out.flipped = flipped != other.flipped;
  out.translation = apply_linear(other.translation) + translation;
  return out;
}

Angle RigidTransform::apply_angle(Angle a) const {
  const double v = flipped ? -a.value() : a.value();
  return Angle(v + rotation.value());
}

Point apply_transform(const RigidTransform& t, Point p) {
  return t.apply_linear(p) + t.translation;
}

std::vector<Point> convex_hull(std::span<const Point> points, double eps) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  // Fuse coincident points, keeping the lexicographically first.
  std::vector<Point> unique;
  for (const Point& p : pts) {
    bool dup = false;
    for (auto it = unique.rbegin(); it != unique.rend(); ++it) {
      if (p.x - it->x > eps) break;
      if (Distance(p, *it) <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(p);
  }
  if (unique.size() <= 2) return unique;

  std::vector<Point> hull(2 * unique.size());
  size_t k = 0;
  // Pops while the turn is not strictly left, dropping collinear points.
  auto turn = [&](Point o, Point a, Point b) {
    const double c = Cross(a - o, b - o);
    const double scale = Distance(a, o) * Distance(b, o);
    return c > eps * std::max(1.0, std::sqrt(scale)) ? c : 0.0;
  };
  for (const Point& p : unique) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (size_t i = unique.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = unique[i];
    while (k >= lower && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

double distance_to_segment(Point p, Point a, Point b, double* param) {
  const Point ab = b - a;
  const double len2 = Dot(ab, ab);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
  if (param) *param = t;
  return Distance(p, a + t * ab);
}

double signed_distance_convex(Point p, std::span<const Point> v) {
  const size_t n = v.size();
  if (n == 0) throw InvariantError("signed distance to an empty region");
  if (n == 1) return Distance(p, v[0]);
  if (n == 2) return distance_to_segment(p, v[0], v[1]);
  double best = std::numeric_limits<double>::infinity();
  bool inside = true;
  for (size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[(i + 1) % n];
    best = std::min(best, distance_to_segment(p, a, b));
    if (Cross(b - a, p - a) < 0.0) inside = false;
  }
  return inside ? -best : best;
}

bool intersect_lines(Point p, Point u, Point q, Point v, double eps_angle,
                     Point* out) {
  const double denom = Cross(u, v);
  const double nu = Norm(u);
  const double nv = Norm(v);
  if (nu == 0.0 || nv == 0.0) return false;
  if (std::abs(denom) <= eps_angle * nu * nv) return false;
  const double s = Cross(q - p, v) / denom;
  *out = p + s * u;
  return true;
}

}  // namespace ccsduet
