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

// Independent checks of planned co-motions: a brute-force search over
// standard-form placements, hull regions built from the endpoint
// differences, and certificate reports.

#ifndef CCSDUET_VERIFY_H_
#define CCSDUET_VERIFY_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccsduet/envelope.h"
#include "ccsduet/planner.h"

namespace ccsduet {

enum class HullSide { kTop, kBottom };

struct HullRegion {
  // CCW closed boundary of segments and arcs; corners are not listed.
  std::vector<BoundaryFeature> features;
  // Sum of feature lengths.
  double perimeter = 0.0;
  HullSide which = HullSide::kTop;
  std::vector<SupportTerm> terms;
  std::shared_ptr<const SupportEnvelope> envelope;

  double reach(double theta) const;
};

// Convex hull of the four differences Ai - Bj together with the support
// points of the sum (centred at the origin) for outward normals running
// counter-clockwise from the initial to the goal orientation (kTop), or the
// remaining normals (kBottom), wherever those support points reach beyond the
// hull of the differences. The boundary is traced from the upper envelope of
// the support terms, so `perimeter` measures it independently of the
// envelope integral.
HullRegion build_hull_region(const Instance& inst, HullSide which,
                             const TolerancePolicy& tol = default_tolerance());

struct OracleOptions {
  // Bounding box inflation; negative selects twice the sum circumradius.
  double margin = -1.0;
  // Grid spacing; must be positive.
  double step = 0.01;
};

// Diagonal of the endpoint bounding box inflated by the sum circumradius.
double scene_diameter(const Instance& inst,
                      const TolerancePolicy& tol = default_tolerance());

// Minimum standard-form length over a grid of intermediate placements, with
// either robot in the middle phase and every side choice per phase. The grid
// is anchored at the lower-left corner of the inflated bounding box, so
// halving the step refines it. Returns +infinity when no placement is
// feasible.
double oracle_grid(const Instance& inst, const OracleOptions& options,
                   const TolerancePolicy& tol = default_tolerance());

struct CertificateReport {
  double lower_bound_gap = 0.0;
  // |length - (min(perimeter(H_top), perimeter(H_bottom)) - |A0A1| - |B0B1|)|
  double hull_identity_residual = 0.0;
  // Same with |A0B0| + |A1B1| subtracted instead.
  double hull_alt_residual = 0.0;
  // "chords" when the first subtraction matches, "distances" for the second,
  // "both" or "neither".
  std::string hull_identity_match;
  // |length - (perimeter(hull(trace A - trace B)) - |A0A1| - |B0B1|)|
  double trace_hull_residual = 0.0;
  std::optional<double> oracle_gap;
  std::optional<double> oracle_step;
  double min_separation = 0.0;
  int piece_count_a = 0;
  int piece_count_b = 0;
  bool pass = false;
};

struct CertifyOptions {
  int samples = 10000;
  // Runs the grid oracle at this step when set.
  std::optional<double> oracle_step;
  // Allowed oracle excess, in multiples of the step.
  double oracle_slack_steps = 5.0;
};

CertificateReport certify(const PlanResult& plan, const Instance& inst,
                          const CertifyOptions& options = {},
                          const TolerancePolicy& tol = default_tolerance());

}  // namespace ccsduet

#endif  // CCSDUET_VERIFY_H_
