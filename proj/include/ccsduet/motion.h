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

// Time-parameterized co-motions of two robots.
//
// A CoMotion pairs one path per robot with a schedule mapping t in [0, 1]
// to arc-length positions on both paths. Linear schedule segments move both
// positions at constant rates. Sliding segments keep the difference A - B on
// the boundary of the sum region while both robots ride straight pieces of
// their paths.

#ifndef CCSDUET_MOTION_H_
#define CCSDUET_MOTION_H_

#include <memory>
#include <utility>
#include <vector>

#include "ccsduet/pathfind.h"
#include "ccsduet/shape.h"

namespace ccsduet {

struct ScheduleSegment {
  enum class Kind { kLinear, kSliding };
  Kind kind = Kind::kLinear;
  double t0 = 0.0;
  double t1 = 0.0;
  // Arc positions on path A and path B at t0 and t1.
  double a0 = 0.0;
  double a1 = 0.0;
  double b0 = 0.0;
  double b1 = 0.0;
  // Sliding only: A - B walks the sum boundary from arc position s0 to s1
  // (s1 < s0 walks clockwise), linearly in t.
  double s0 = 0.0;
  double s1 = 0.0;
  // Offsets of the true differences from the boundary at t0 and t1, blended
  // linearly so the segment joins its neighbours exactly.
  Point c0;
  Point c1;
};

struct CoMotion {
  PointPath path_a;
  PointPath path_b;
  std::vector<ScheduleSegment> schedule;
  std::vector<double> phase_marks;
  // Sum template (A + B centred at the origin) used for separation queries.
  std::shared_ptr<const SumBoundary> sum;

  double length() const { return path_a.length + path_b.length; }

  // Decoupled motion: the listed phases run one after another at unit speed
  // by total length. Each phase moves exactly one robot by `amount`.
  struct Phase {
    bool moves_a = true;
    double amount = 0.0;
  };
  static CoMotion Decoupled(PointPath path_a, PointPath path_b,
                            const std::vector<Phase>& phases,
                            std::shared_ptr<const SumBoundary> sum);

  // Arc positions on both paths at time t.
  std::pair<double, double> arc_positions(double t) const;

  CoMotion transformed(const RigidTransform& t) const;
  // The same motion run backwards in time.
  CoMotion reversed() const;
  // Exchanges the roles of the two robots. The sum template is symmetric, so
  // it is shared.
  CoMotion swapped() const;
};

// Positions (A, B) at time t. Throws InputError unless 0 <= t <= 1.
std::pair<Point, Point> evaluate(const CoMotion& m, double t);

// Minimum separation over n equally spaced samples of [0, 1].
double min_separation(const CoMotion& m, int n_samples);

struct OrientationSample {
  double t = 0.0;
  OrientationResult orientation;
};

struct OrientationProfile {
  std::vector<OrientationSample> samples;
  // Unwrapped representative angles, one per sample.
  std::vector<double> unwrapped() const;
};

// Orientations at n equally spaced samples; non-viable samples are skipped.
OrientationProfile orientation_profile(const CoMotion& m, int n_samples);

// Whether the unwrapped profile never moves against `direction` by more than
// eps_angle.
bool is_orientation_monotone(const CoMotion& m, Turn direction, int n_samples,
                             double eps_angle = 1e-9);

// Couples the robots over every time interval whose end configurations share
// an orientation and across which the orientation runs backwards, so that the
// orientation never turns against `direction`. Traces and length are
// unchanged. Intervals on which either robot leaves a straight piece are left
// as they are.
CoMotion make_orientation_monotone(const CoMotion& m, Turn direction);

// Contact components: maximal runs of samples with separation <= threshold,
// reported as [t_begin, t_end] pairs.
std::vector<std::pair<double, double>> contact_intervals(
    const CoMotion& m, int n_samples, double threshold = 1e-7);

// Replaces each gap between contact components by a sliding motion that
// keeps the robots in contact, when both robots ride straight pieces across
// the gap. Gaps that cannot be bridged are left unchanged.
CoMotion make_contact_preserving(const CoMotion& m, Turn direction);

}  // namespace ccsduet

#endif  // CCSDUET_MOTION_H_
