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

// Tangents, corridors and shortest paths of a point around one convex
// obstacle.
//
// A path "around S counter-clockwise" keeps S on its left, so the mover's
// angular position about the centre of S increases.

#ifndef CCSDUET_PATHFIND_H_
#define CCSDUET_PATHFIND_H_

#include <memory>
#include <vector>

#include "ccsduet/geom.h"
#include "ccsduet/shape.h"

namespace ccsduet {

enum class Side { kCcw, kCw, kEither };

struct TangentLine {
  Point through;
  Point touch;
  // Upper: the touch point lies right of the directed line through -> centre,
  // equivalently S lies left of the ray through -> touch.
  bool upper = false;

  Point direction() const { return touch - through; }
};

struct TangentPair {
  TangentLine upper;
  TangentLine lower;
};

// Both support lines of S through p. A point on the boundary (within eps)
// is its own touch point. Throws InputError when p is strictly inside S.
TangentPair tangents_from_point(Point p, const SumBoundary& s,
                                const TolerancePolicy& tol = default_tolerance());

// Signed distance from p to corr(q0, q1) = segment(q0, q1) + (template of s).
// The placement of `s` is ignored.
double corridor_distance(Point p, Point q0, Point q1, const SumBoundary& s);

// Open membership p in corr(q0, q1) (closed when `closed` is set).
bool in_corridor(Point p, Point q0, Point q1, const SumBoundary& s,
                 bool closed = false,
                 const TolerancePolicy& tol = default_tolerance());

// Whether segment(from, to) meets the open region bounded by s.
bool segment_blocked(Point from, Point to, const SumBoundary& s,
                     const TolerancePolicy& tol = default_tolerance());

struct PathPiece {
  enum class Kind { kSegment, kWalk };
  Kind kind = Kind::kSegment;
  Point from;
  Point to;
  double length = 0.0;
  // Walk data.
  std::shared_ptr<const SumBoundary> boundary;
  double from_s = 0.0;
  Turn direction = Turn::kCcw;

  Point point_at(double local) const;
};

struct PointPath {
  Point start;
  Point end;
  std::vector<PathPiece> pieces;
  double length = 0.0;

  static PointPath Straight(Point from, Point to);
  static PointPath Stationary(Point at);

  // Point at arc length s from the start, clamped to [0, length].
  Point point_at(double s) const;
  // Appends `other`, which must start where this path ends.
  void append(const PointPath& other);
  PointPath reversed() const;
  PointPath transformed(const RigidTransform& t) const;
};

// Shortest path from `from` to `to` avoiding the open region of s. With
// kEither the shorter side wins; ties go to kCcw. `chosen` receives the side
// actually used. Throws InputError when an endpoint is strictly inside s.
PointPath shortest_path_around(Point from, Point to, const SumBoundary& s,
                               Side side, Turn* chosen = nullptr,
                               const TolerancePolicy& tol = default_tolerance());

// Length of shortest_path_around without building its pieces.
double shortest_path_length(Point from, Point to, const SumBoundary& s,
                            Side side,
                            const TolerancePolicy& tol = default_tolerance());

}  // namespace ccsduet

#endif  // CCSDUET_PATHFIND_H_
