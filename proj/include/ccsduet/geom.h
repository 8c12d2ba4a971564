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

#ifndef CCSDUET_GEOM_H_
#define CCSDUET_GEOM_H_

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccsduet {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Base class for every error raised by the library. Subclasses map onto the
// status codes of the C API.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad shapes, bad numbers, unparsable documents.
class InputError : public Error {
 public:
  using Error::Error;
};

// Start or goal configuration has overlapping robots.
class NonViableError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double Dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double Cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Point a) { return std::hypot(a.x, a.y); }
inline double Distance(Point a, Point b) { return Norm(a - b); }
inline Point UnitVector(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double AngleOf(Point v) { return std::atan2(v.y, v.x); }
// Rotates a vector by +90 degrees.
constexpr Point LeftPerp(Point v) { return {-v.y, v.x}; }
constexpr Point RightPerp(Point v) { return {v.y, -v.x}; }
inline bool IsFinite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// An angle in radians, always held in [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;
  // Normalizes `raw`; throws InputError when it is not finite.
  explicit Angle(double raw);

  constexpr double value() const { return value_; }
  Point unit() const { return UnitVector(value_); }

  friend constexpr bool operator==(Angle a, Angle b) = default;

 private:
  double value_ = 0.0;
};

Angle normalize_angle(double raw);

// CCW distance from `from` to `to`, in [0, 2pi).
double ccw_delta(Angle from, Angle to);

// Angles compared modulo 2pi within `eps`.
bool angles_equal(Angle a, Angle b, double eps);

struct TolerancePolicy {
  double eps_length = 1e-9;
  double eps_angle = 1e-9;
};

// Default policy; CCS_DUET_EPS in the environment overrides eps_length.
TolerancePolicy default_tolerance();

// The arc swept counter-clockwise from `start` to `end`. start == end is a
// single direction unless `full` is set.
struct AngularInterval {
  Angle start;
  Angle end;
  bool full = false;

  static AngularInterval Single(Angle a) { return {a, a, false}; }
  static AngularInterval Full() { return {Angle(0.0), Angle(0.0), true}; }
  // Builds the interval from `start` sweeping `width` radians CCW. Widths of at
  // least 2pi - eps_angle collapse to the full circle.
  static AngularInterval FromWidth(Angle start, double width,
                                   double eps_angle = 1e-9);

  double width() const { return full ? kTwoPi : ccw_delta(start, end); }
  bool is_single() const { return !full && start == end; }
  // Complement, sharing endpoints.
  AngularInterval complement() const;
};

// True iff `theta` lies on the CCW arc from I.start to I.end, endpoints
// inclusive within `eps`.
bool interval_contains(const AngularInterval& interval, Angle theta,
                       double eps = 1e-9);

// Intersection of two angular intervals: zero, one or two pieces. Pieces
// that touch in a single direction are kept as single-direction intervals.
std::vector<AngularInterval> interval_intersection(const AngularInterval& a,
                                                   const AngularInterval& b);

// p -> R(rotation) * F(p) + translation, where F reflects across the x-axis
// when `flipped` is set.
struct RigidTransform {
  Angle rotation;
  Point translation;
  bool flipped = false;

  static RigidTransform Identity() { return {}; }
  static RigidTransform Flip() { return {Angle(0.0), {0.0, 0.0}, true}; }

  // Applies only the linear part.
  Point apply_linear(Point v) const;
  RigidTransform inverse() const;
  // (this o other)(p) == this(other(p)).
  RigidTransform compose(const RigidTransform& other) const;
  // Maps a direction angle through the linear part.
  Angle apply_angle(Angle a) const;
};

Point apply_transform(const RigidTransform& t, Point p);

// Andrew's monotone chain on lexicographically sorted, de-duplicated points.
// Returns the strictly convex CCW vertex list starting at the lexicographic
// minimum. One or two distinct points are returned as-is; collinear inputs
// yield their two extremes.
std::vector<Point> convex_hull(std::span<const Point> points,
                               double eps = 0.0);

// Signed distance from `p` to a convex region given by its CCW vertices.
// One vertex is a point, two a segment; negative strictly inside polygons.
double signed_distance_convex(Point p, std::span<const Point> ccw_vertices);

// Distance from p to the closed segment ab, and the nearest parameter in [0,1].
double distance_to_segment(Point p, Point a, Point b, double* param = nullptr);

// Intersection of lines p + s*u and q + t*v. Returns false when parallel
// within `eps_angle`.
bool intersect_lines(Point p, Point u, Point q, Point v, double eps_angle,
                     Point* out);

}  // namespace ccsduet

#endif  // CCSDUET_GEOM_H_
