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

// Upper envelopes of support functions.
//
// Every support function handled by the library is a pointwise maximum of
// terms a*cos(t) + b*sin(t) + c, each active on an angular interval: a point
// (x, y) contributes (x, y, 0) everywhere, a circular arc of radius r around
// (x, y) contributes (x, y, r) on its normal range. The envelope is
// integrated exactly by splitting the circle at every domain endpoint and
// every pairwise crossing, so that one term dominates each sub-interval.

#ifndef CCSDUET_ENVELOPE_H_
#define CCSDUET_ENVELOPE_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ccsduet/geom.h"

namespace ccsduet {

struct SupportTerm {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  AngularInterval domain = AngularInterval::Full();

  static SupportTerm FromPoint(Point p) { return {p.x, p.y, 0.0, AngularInterval::Full()}; }
  static SupportTerm FromArc(Point center, double radius,
                             const AngularInterval& normals) {
    return {center.x, center.y, radius, normals};
  }

  double eval(double theta) const {
    return a * std::cos(theta) + b * std::sin(theta) + c;
  }
  // Closed-form antiderivative difference over [lo, hi].
  double integral(double lo, double hi) const {
    return a * (std::sin(hi) - std::sin(lo)) - b * (std::cos(hi) - std::cos(lo)) +
           c * (hi - lo);
  }
};

// One maximal run of the envelope on which a single term dominates.
struct EnvelopeSpan {
  double lo = 0.0;  // radians, lo < hi, may exceed 2pi for the final span
  double hi = 0.0;
  int term = -1;    // -1 when no term is active
};

class SupportEnvelope {
 public:
  explicit SupportEnvelope(std::vector<SupportTerm> terms);

  // Max over active terms, or nullopt when none is active at theta.
  std::optional<double> value(double theta) const;
  // Exact integral over the circle. Directions where no term is active
  // contribute zero.
  double integral() const;
  // Whether some direction has no active term.
  bool has_gaps() const;
  const std::vector<EnvelopeSpan>& spans() const { return spans_; }
  const std::vector<SupportTerm>& terms() const { return terms_; }

 private:
  std::vector<SupportTerm> terms_;
  std::vector<EnvelopeSpan> spans_;
};

// Adaptive Simpson quadrature of f over [lo, hi] to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double tol, int max_depth = 40);

// Integral of f over the circle, split at the given breakpoints (radians).
double integrate_circle(const std::function<double(double)>& f,
                        std::span<const double> breakpoints, double tol);

}  // namespace ccsduet

#endif  // CCSDUET_ENVELOPE_H_
