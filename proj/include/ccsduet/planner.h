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

// Optimal co-motions of two convex centrally-symmetric robots.
//
// Planning runs on a normalized copy of the instance (B0 at the origin, B1 on
// the positive x-axis, robots and endpoints relabelled so that A0 lies in B's
// corridor). Counter-clockwise candidates are built directly; clockwise ones
// are built on the mirror image of the normalized instance.

#ifndef CCSDUET_PLANNER_H_
#define CCSDUET_PLANNER_H_

#include <optional>
#include <string>
#include <vector>

#include "ccsduet/geom.h"
#include "ccsduet/motion.h"
#include "ccsduet/pathfind.h"
#include "ccsduet/shape.h"

namespace ccsduet {

struct Instance {
  CcsShape shape_a;
  CcsShape shape_b;
  Point a0;
  Point b0;
  Point a1;
  Point b1;

  // A + B centred at the origin.
  SumBoundary sum_template(const TolerancePolicy& tol = default_tolerance()) const;
  Instance transformed(const RigidTransform& t) const;
  // Exchanges the robots.
  Instance swapped() const;
  // Exchanges initial and goal configurations.
  Instance reversed() const;
};

// Throws NonViableError naming the offending configuration when either
// endpoint configuration overlaps by more than eps_length.
void check_viable(const Instance& inst,
                  const TolerancePolicy& tol = default_tolerance());

struct TransformRecord {
  // Applied after the relabelling below.
  RigidTransform transform;
  bool swap_roles = false;
  bool swap_ends = false;
  bool flipped() const { return transform.flipped; }
};

struct NormalizedInstance {
  Instance instance;
  TransformRecord record;
};

enum class CaseLabel {
  kStraight,
  kB0InACorrAbove,
  kB0InACorrBelow,
  kB0InACorrMiddle,
  kA1AboveBoth,
  kA1BelowBoth,
  kA1LeftOfBoth,
  kA1RightOfBoth,
  kA1BetweenXTangents,
  kA1BelowXTangents,
  kDegenerateFixedB,
  kDegenerateFixedA,
  kDegenerateNoop,
};

const char* to_string(CaseLabel label);
// Throws InputError for unknown names.
CaseLabel case_label_from_string(const std::string& name);

struct Candidate {
  CoMotion comotion;
  Point a_int;
  Turn direction = Turn::kCcw;
  bool convex = true;
  double length = 0.0;
};

struct PlanResult {
  Candidate chosen;
  CaseLabel label = CaseLabel::kStraight;
  double lower_bound_ccw = 0.0;
  double lower_bound_cw = 0.0;
  // Shortest rejected (non-convex) candidate, in the original frame.
  std::optional<Candidate> rejected;
  // Absent for straight and degenerate plans.
  std::optional<TransformRecord> record;

  double length() const { return chosen.length; }
  Turn direction() const { return chosen.direction; }
};

// Two-phase straight candidate (one robot moves fully, then the other) when
// either ordering keeps each mover out of the other's corridor.
std::optional<Candidate> check_straight_line(
    const Instance& inst, const TolerancePolicy& tol = default_tolerance());

// Throws InvariantError when no relabelling reaches normal form.
NormalizedInstance normalize(const Instance& inst,
                             const TolerancePolicy& tol = default_tolerance());

// Mirror image across the x-axis, recorded in the transform.
NormalizedInstance flip(const NormalizedInstance& n);

CaseLabel classify(const NormalizedInstance& n,
                   const TolerancePolicy& tol = default_tolerance());

// Throws InvariantError for straight and degenerate labels, and when the
// defining tangent lines are parallel.
Point select_a_int(CaseLabel label, const NormalizedInstance& n,
                   const TolerancePolicy& tol = default_tolerance());

// Counter-clockwise standard-form candidate through a_int, in the frame of n.
// Throws InputError when a_int is strictly inside a forbidden region.
Candidate build_standard(const NormalizedInstance& n, Point a_int,
                         const TolerancePolicy& tol = default_tolerance());

// Maps a candidate of the normalized frame back to the original instance.
Candidate to_original(const Candidate& c, const TransformRecord& record);

// Normal directions a co-motion turning net in `direction` must realize,
// swept from the initial to the goal orientation. Vertex contacts contribute
// their whole normal cone, so the clockwise range of an instance is the
// mirror image of the counter-clockwise range of its reflection.
AngularInterval turning_range(const Instance& inst, Turn direction,
                              const TolerancePolicy& tol = default_tolerance());

// Lower bound on the length of any co-motion that turns net in `direction`.
double lower_bound(const Instance& inst, Turn direction,
                   const TolerancePolicy& tol = default_tolerance());

// Perimeter of the convex hull of a path's trace.
double trace_hull_perimeter(const PointPath& path);

// Piece count of a path, ignoring zero-length pieces.
int piece_count(const PointPath& path);

PlanResult plan(const Instance& inst,
                const TolerancePolicy& tol = default_tolerance());

}  // namespace ccsduet

#endif  // CCSDUET_PLANNER_H_
