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

// Robot bodies and their Minkowski sums.
//
// A convex centrally-symmetric (CCS) robot is either a disc or a CS polygon.
// The sum of two such robots is always a "rounded polygon": a CS core polygon
// (a single point when both robots are discs) dilated by a radius that is
// zero unless a disc is involved. SumBoundary stores that core/radius pair
// and derives the boundary as a cyclic list of features ordered by outward
// normal angle: a vertex arc (radius zero for sharp corners) followed by the
// translated edge, for every core vertex.

#ifndef CCSDUET_SHAPE_H_
#define CCSDUET_SHAPE_H_

#include <optional>
#include <vector>

#include "ccsduet/envelope.h"
#include "ccsduet/geom.h"

namespace ccsduet {

enum class Turn { kCcw, kCw };

inline Turn opposite(Turn t) { return t == Turn::kCcw ? Turn::kCw : Turn::kCcw; }
inline const char* to_string(Turn t) { return t == Turn::kCcw ? "ccw" : "cw"; }

// Maximizers of a support query: a single point, or an edge when the query
// direction is an edge normal.
struct SupportResult {
  Point first;
  Point second;
  bool is_edge = false;
};

class CcsShape {
 public:
  enum class Kind { kDisc, kPolygon };

  // Throws InputError unless radius > 0 and finite.
  static CcsShape Disc(double radius);
  // Throws InputError unless the vertices form a convex, CCW, positive-area
  // polygon with an even count >= 4 that is symmetric about the origin.
  static CcsShape Polygon(std::vector<Point> ccw_vertices,
                          const TolerancePolicy& tol = default_tolerance());

  Kind kind() const { return kind_; }
  bool is_disc() const { return kind_ == Kind::kDisc; }
  double radius() const { return radius_; }
  const std::vector<Point>& vertices() const { return vertices_; }

  // Support function of the body centred at the origin.
  double reach(Angle theta) const;
  SupportResult support_point(Angle theta) const;

  // Image under the linear part of `t` (translation is ignored: bodies are
  // always described about their own centre).
  CcsShape transformed(const RigidTransform& t) const;

 private:
  Kind kind_ = Kind::kDisc;
  double radius_ = 0.0;
  std::vector<Point> vertices_;
};

struct BoundaryFeature {
  enum class Kind { kSegment, kArc };
  Kind kind = Kind::kSegment;
  Point from;  // start point in CCW order
  Point to;    // end point in CCW order
  // Arc data; radius zero marks a sharp polygon corner.
  Point center;
  double radius = 0.0;
  Angle from_angle;
  Angle to_angle;
  AngularInterval normal_range;
  double length = 0.0;
  // Arc-length position of `from` along the boundary.
  double start_s = 0.0;
  // Set on walk pieces traversed clockwise (from -> to is then reversed).
  bool reversed = false;
};

struct OrientationResult {
  AngularInterval interval;
  // Representative direction (interval midpoint).
  Angle value() const;
};

class SumBoundary {
 public:
  // `core` holds CCW vertices relative to `center`: one point, or a convex
  // polygon with at least three vertices.
  SumBoundary(std::vector<Point> core, double radius, Point center);

  Point center() const { return center_; }
  double radius() const { return radius_; }
  const std::vector<Point>& core() const { return core_; }
  const std::vector<BoundaryFeature>& features() const { return features_; }
  double perimeter() const { return perimeter_; }

  SumBoundary placed_at(Point center) const;
  SumBoundary transformed(const RigidTransform& t) const;

  // Support value of the body about its own centre.
  double relative_reach(Angle theta) const;
  // Support value of the placed body.
  double reach(Angle theta) const;
  SupportResult support_point(Angle theta) const;

  // Signed distance from p to the boundary; negative inside.
  double signed_distance(Point p) const;
  bool contains(Point p, bool closed, double eps = 1e-9) const;
  // Outward normal direction(s) at the boundary point nearest to p. Throws
  // NonViableError when p is deeper inside than eps.
  OrientationResult orientation_at(Point p, double eps = 1e-9) const;

  // Arc-length parameter of the boundary point nearest to p, in
  // [0, perimeter). `distance` receives |p - boundary point|.
  double locate(Point p, double* distance = nullptr) const;
  Point point_at(double s) const;
  // Index of the feature containing arc-length position s.
  size_t feature_at(double s) const;

  // Support terms describing the boundary, restricted to normals in
  // `normals` (all of them when absent). Sharp corners and arc endpoints are
  // emitted as point terms only when their normal cone meets the range.
  // With `gated` set, point terms are active only on their part of the range,
  // so the terms describe the support function restricted to `normals`;
  // otherwise they describe the convex hull of that boundary portion.
  std::vector<SupportTerm> support_terms(
      const std::optional<AngularInterval>& normals = std::nullopt,
      bool gated = false) const;

 private:
  void build_features();
  // Feature whose normal range contains theta, by binary search.
  size_t feature_for_normal(Angle theta) const;

  std::vector<Point> core_;
  double radius_ = 0.0;
  Point center_;
  std::vector<BoundaryFeature> features_;
  double perimeter_ = 0.0;
  // Normal angle at which the first feature starts.
  Angle normal_origin_;
  // CCW offset of each feature's first normal from normal_origin_.
  std::vector<double> normal_offsets_;
};

// Sum A + B placed at `center`; equals A - B for CCS bodies.
SumBoundary minkowski_sum(const CcsShape& a, const CcsShape& b, Point center,
                          const TolerancePolicy& tol = default_tolerance());

double reach(const CcsShape& shape, Angle theta);
double reach(const SumBoundary& sum, Angle theta);
SupportResult support_point(const CcsShape& shape, Angle theta);
SupportResult support_point(const SumBoundary& sum, Angle theta);

bool contains(const SumBoundary& sum, Point p, bool closed,
              const TolerancePolicy& tol = default_tolerance());

// Signed distance from posA to the boundary of (A+B)[posB]. Non-negative iff
// the configuration is viable.
double separation(const CcsShape& a, Point pos_a, const CcsShape& b,
                  Point pos_b);

OrientationResult orientation(const CcsShape& a, Point pos_a,
                              const CcsShape& b, Point pos_b,
                              const TolerancePolicy& tol = default_tolerance());

struct BoundaryWalk {
  std::vector<BoundaryFeature> pieces;  // in travel order
  double length = 0.0;
  double from_s = 0.0;
  double to_s = 0.0;
  Turn direction = Turn::kCcw;
};

// The boundary portion from `from` to `to` travelling in `direction`. Throws
// InputError when either point is off the boundary by more than eps_length.
BoundaryWalk boundary_walk(const SumBoundary& sum, Point from, Point to,
                           Turn direction,
                           const TolerancePolicy& tol = default_tolerance());

// Pieces of the walk starting at arc position `from_s` covering `length`.
std::vector<BoundaryFeature> walk_pieces(const SumBoundary& sum, double from_s,
                                         double length, Turn direction);

}  // namespace ccsduet

#endif  // CCSDUET_SHAPE_H_
