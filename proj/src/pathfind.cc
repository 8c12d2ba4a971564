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

#include "ccsduet/pathfind.h"

#include <algorithm>
#include <cmath>

namespace ccsduet {
namespace {

// Extreme touch point seen from p: `left` selects the tangent with S on the
// left of the ray p -> touch.
Point extreme_touch(Point p, const SumBoundary& s, bool left) {
  std::vector<Point> cands;
  const double r = s.radius();
  for (const Point& v : s.core()) {
    const Point c = s.center() + v;
    const double d = Distance(p, c);
    if (r <= 0.0) {
      cands.push_back(c);
      continue;
    }
    if (d <= r) continue;
    const double alpha = AngleOf(p - c);
    const double beta = std::acos(std::clamp(r / d, -1.0, 1.0));
    cands.push_back(c + r * UnitVector(alpha + beta));
    cands.push_back(c + r * UnitVector(alpha - beta));
  }
  if (cands.empty()) throw InputError("tangent from a point inside the region");
  Point best = cands[0];
  for (size_t i = 1; i < cands.size(); ++i) {
    const Point a = best - p;
    const Point b = cands[i] - p;
    const double cr = Cross(a, b);
    const double scale = Norm(a) * Norm(b);
    // Left tangent: every other candidate must be left of the ray.
    const double side = left ? -cr : cr;
    if (side > 1e-14 * scale) {
      best = cands[i];
    } else if (std::abs(cr) <= 1e-14 * scale && Dot(a, b) > 0.0 &&
               Norm(b) < Norm(a)) {
      best = cands[i];
    }
  }
  return best;
}

struct AroundPlan {
  bool straight = true;
  Point touch_from;
  Point touch_to;
  double from_s = 0.0;
  double walk = 0.0;
  double length = 0.0;
};

Point boundary_touch(Point p, const SumBoundary& s, bool left, double eps) {
  if (std::abs(s.signed_distance(p)) <= eps) return p;
  return extreme_touch(p, s, left);
}

AroundPlan plan_side(Point from, Point to, const SumBoundary& s, Turn turn,
                     double eps) {
  AroundPlan plan;
  plan.straight = false;
  const bool ccw = turn == Turn::kCcw;
  plan.touch_from = boundary_touch(from, s, ccw, eps);
  plan.touch_to = boundary_touch(to, s, !ccw, eps);
  const double per = s.perimeter();
  plan.from_s = s.locate(plan.touch_from);
  const double to_s = s.locate(plan.touch_to);
  double walk = ccw ? to_s - plan.from_s : plan.from_s - to_s;
  walk = std::fmod(walk, per);
  if (walk < 0.0) walk += per;
  // Touch points that coincide up to rounding mean no walk at all.
  if (Distance(plan.touch_from, plan.touch_to) <= eps) walk = 0.0;
  plan.walk = walk;
  plan.length = Distance(from, plan.touch_from) + walk +
                Distance(plan.touch_to, to);
  return plan;
}

void check_endpoints(Point from, Point to, const SumBoundary& s, double eps) {
  if (s.signed_distance(from) < -eps || s.signed_distance(to) < -eps) {
    throw InputError("path endpoint is strictly inside the obstacle");
  }
}

}  // namespace

TangentPair tangents_from_point(Point p, const SumBoundary& s,
                                const TolerancePolicy& tol) {
  const double sd = s.signed_distance(p);
  if (sd < -tol.eps_length) {
    throw InputError("tangent from a point strictly inside the region");
  }
  TangentPair out;
  out.upper.through = p;
  out.lower.through = p;
  out.upper.upper = true;
  if (sd <= tol.eps_length) {
    const Point at = s.point_at(s.locate(p));
    out.upper.touch = at;
    out.lower.touch = at;
    return out;
  }
  out.upper.touch = extreme_touch(p, s, true);
  out.lower.touch = extreme_touch(p, s, false);
  return out;
}

double corridor_distance(Point p, Point q0, Point q1, const SumBoundary& s) {
  std::vector<Point> pts;
  for (const Point& v : s.core()) {
    pts.push_back(v + q0);
    pts.push_back(v + q1);
  }
  const std::vector<Point> hull = convex_hull(pts);
  return signed_distance_convex(p, hull) - s.radius();
}

bool in_corridor(Point p, Point q0, Point q1, const SumBoundary& s,
                 bool closed, const TolerancePolicy& tol) {
  const double d = corridor_distance(p, q0, q1, s);
  return closed ? d <= tol.eps_length : d < -tol.eps_length;
}

bool segment_blocked(Point from, Point to, const SumBoundary& s,
                     const TolerancePolicy& tol) {
  // S[C] meets the segment iff C lies in the segment's corridor.
  return in_corridor(s.center(), from, to, s, false, tol);
}

Point PathPiece::point_at(double local) const {
  local = std::clamp(local, 0.0, length);
  if (kind == Kind::kSegment) {
    if (length <= 0.0) return from;
    return from + (local / length) * (to - from);
  }
  return boundary->point_at(direction == Turn::kCcw ? from_s + local
                                                    : from_s - local);
}

PointPath PointPath::Straight(Point from, Point to) {
  PointPath path;
  path.start = from;
  path.end = to;
  const double len = Distance(from, to);
  if (len > 0.0) {
    PathPiece piece;
    piece.from = from;
    piece.to = to;
    piece.length = len;
    path.pieces.push_back(piece);
    path.length = len;
  }
  return path;
}

PointPath PointPath::Stationary(Point at) { return Straight(at, at); }

Point PointPath::point_at(double s) const {
  if (s <= 0.0 || pieces.empty()) return start;
  if (s >= length) return end;
  for (const PathPiece& p : pieces) {
    if (s <= p.length) return p.point_at(s);
    s -= p.length;
  }
  return end;
}

void PointPath::append(const PointPath& other) {
  if (pieces.empty() && length == 0.0) start = other.start;
  for (const PathPiece& p : other.pieces) pieces.push_back(p);
  length += other.length;
  end = other.end;
}

PointPath PointPath::reversed() const {
  PointPath out;
  out.start = end;
  out.end = start;
  out.length = length;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    PathPiece p = *it;
    std::swap(p.from, p.to);
    if (p.kind == PathPiece::Kind::kWalk) {
      p.from_s = it->direction == Turn::kCcw ? it->from_s + it->length
                                              : it->from_s - it->length;
      p.direction = opposite(it->direction);
    }
    out.pieces.push_back(p);
  }
  return out;
}

PointPath PointPath::transformed(const RigidTransform& t) const {
  PointPath out;
  out.start = apply_transform(t, start);
  out.end = apply_transform(t, end);
  out.length = length;
  for (const PathPiece& p : pieces) {
    PathPiece q = p;
    q.from = apply_transform(t, p.from);
    q.to = apply_transform(t, p.to);
    if (p.kind == PathPiece::Kind::kWalk) {
      q.boundary = std::make_shared<const SumBoundary>(p.boundary->transformed(t));
      q.from_s = q.boundary->locate(apply_transform(t, p.point_at(0.0)));
      if (t.flipped) q.direction = opposite(p.direction);
    }
    out.pieces.push_back(q);
  }
  return out;
}

PointPath shortest_path_around(Point from, Point to, const SumBoundary& s,
                               Side side, Turn* chosen,
                               const TolerancePolicy& tol) {
  const double eps = tol.eps_length;
  check_endpoints(from, to, s, eps);
  if (chosen) *chosen = side == Side::kCw ? Turn::kCw : Turn::kCcw;
  if (!segment_blocked(from, to, s, tol)) return PointPath::Straight(from, to);

  AroundPlan plan;
  Turn turn = Turn::kCcw;
  if (side == Side::kEither) {
    const AroundPlan ccw = plan_side(from, to, s, Turn::kCcw, eps);
    const AroundPlan cw = plan_side(from, to, s, Turn::kCw, eps);
    const double slack = 1e-12 * std::max(1.0, ccw.length);
    if (cw.length < ccw.length - slack) {
      plan = cw;
      turn = Turn::kCw;
    } else {
      plan = ccw;
    }
  } else {
    turn = side == Side::kCcw ? Turn::kCcw : Turn::kCw;
    plan = plan_side(from, to, s, turn, eps);
  }
  if (chosen) *chosen = turn;

  PointPath path = PointPath::Straight(from, plan.touch_from);
  path.start = from;
  if (plan.walk > 0.0) {
    PointPath walk;
    walk.start = plan.touch_from;
    walk.end = plan.touch_to;
    PathPiece piece;
    piece.kind = PathPiece::Kind::kWalk;
    piece.from = plan.touch_from;
    piece.to = plan.touch_to;
    piece.length = plan.walk;
    piece.boundary = std::make_shared<const SumBoundary>(s);
    piece.from_s = plan.from_s;
    piece.direction = turn;
    walk.pieces.push_back(piece);
    walk.length = plan.walk;
    path.append(walk);
  }
  PointPath tail = PointPath::Straight(plan.touch_to, to);
  path.append(tail);
  path.end = to;
  return path;
}

double shortest_path_length(Point from, Point to, const SumBoundary& s,
                            Side side, const TolerancePolicy& tol) {
  const double eps = tol.eps_length;
  check_endpoints(from, to, s, eps);
  if (!segment_blocked(from, to, s, tol)) return Distance(from, to);
  if (side == Side::kCcw) return plan_side(from, to, s, Turn::kCcw, eps).length;
  if (side == Side::kCw) return plan_side(from, to, s, Turn::kCw, eps).length;
  return std::min(plan_side(from, to, s, Turn::kCcw, eps).length,
                  plan_side(from, to, s, Turn::kCw, eps).length);
}

}  // namespace ccsduet
