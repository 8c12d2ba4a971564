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

#include "ccsduet/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace ccsduet {
namespace {

Point term_point(const SupportTerm& t, double theta) {
  return {t.a + t.c * std::cos(theta), t.b + t.c * std::sin(theta)};
}

double circumradius(const SumBoundary& s) {
  double r = 0.0;
  for (const Point& v : s.core()) r = std::max(r, Norm(v));
  return r + s.radius();
}

struct Box {
  double x0, y0, x1, y1;
};

Box endpoint_box(const Instance& inst) {
  Box b{inst.a0.x, inst.a0.y, inst.a0.x, inst.a0.y};
  for (Point p : {inst.b0, inst.a1, inst.b1}) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

// Length of a three-phase standard-form motion: the outer robot goes from p0
// to g around q0, the middle robot from q0 to q1 around g, the outer robot
// from g to p1 around q1. Infinite when g is inside a forbidden region.
double standard_length(Point p0, Point p1, Point q0, Point q1, Point g,
                       const SumBoundary& tmpl, const TolerancePolicy& tol) {
  const double eps = tol.eps_length;
  if (tmpl.signed_distance(g - q0) < -eps || tmpl.signed_distance(g - q1) < -eps) {
    return std::numeric_limits<double>::infinity();
  }
  return shortest_path_length(p0 - q0, g - q0, tmpl, Side::kEither, tol) +
         shortest_path_length(q0 - g, q1 - g, tmpl, Side::kEither, tol) +
         shortest_path_length(g - q1, p1 - q1, tmpl, Side::kEither, tol);
}

}  // namespace

double HullRegion::reach(double theta) const {
  return envelope->value(theta).value_or(
      -std::numeric_limits<double>::infinity());
}

HullRegion build_hull_region(const Instance& inst, HullSide which,
                             const TolerancePolicy& tol) {
  const SumBoundary s = inst.sum_template(tol);
  const AngularInterval range = turning_range(
      inst, which == HullSide::kTop ? Turn::kCcw : Turn::kCw, tol);
  HullRegion hull;
  hull.which = which;
  for (Point a : {inst.a0, inst.a1}) {
    for (Point b : {inst.b0, inst.b1}) {
      hull.terms.push_back(SupportTerm::FromPoint(a - b));
    }
  }
  // Only the part of the sum boundary that sticks out of the difference hull
  // within the range contributes; the rest of the range is dominated.
  for (const SupportTerm& t : s.support_terms(range, true)) hull.terms.push_back(t);
  hull.envelope = std::make_shared<const SupportEnvelope>(hull.terms);
  const SupportEnvelope& env = *hull.envelope;
  // Spans of negligible width appear where a gated term switches on; they
  // carry no mass and would make the traced boundary double back.
  std::vector<EnvelopeSpan> spans;
  for (const EnvelopeSpan& sp : env.spans()) {
    if (sp.hi - sp.lo <= 1e-12) continue;
    if (!spans.empty() && spans.back().term == sp.term) {
      spans.back().hi = sp.hi;
    } else {
      spans.push_back(sp);
    }
  }
  if (spans.size() > 1 && spans.front().term == spans.back().term) {
    spans.front().lo = spans.back().lo - kTwoPi;
    spans.pop_back();
  }
  // Each span contributes its support point or arc; consecutive spans are
  // joined by an edge normal to the angle between them.
  for (size_t i = 0; i < spans.size(); ++i) {
    const EnvelopeSpan& sp = spans[i];
    const SupportTerm& t = hull.terms[sp.term];
    if (t.c > 0.0) {
      BoundaryFeature arc;
      arc.kind = BoundaryFeature::Kind::kArc;
      arc.center = {t.a, t.b};
      arc.radius = t.c;
      arc.from_angle = Angle(sp.lo);
      arc.to_angle = Angle(sp.hi);
      arc.normal_range = AngularInterval::FromWidth(arc.from_angle, sp.hi - sp.lo);
      arc.from = term_point(t, sp.lo);
      arc.to = term_point(t, sp.hi);
      arc.length = t.c * (sp.hi - sp.lo);
      hull.features.push_back(arc);
    }
    const EnvelopeSpan& next = spans[(i + 1) % spans.size()];
    const Point from = term_point(t, sp.hi);
    const Point to = term_point(hull.terms[next.term], next.lo);
    if (Distance(from, to) > 0.0) {
      BoundaryFeature edge;
      edge.from = from;
      edge.to = to;
      edge.length = Distance(from, to);
      edge.normal_range = AngularInterval::Single(Angle(sp.hi));
      hull.features.push_back(edge);
    }
  }
  double start = 0.0;
  for (BoundaryFeature& f : hull.features) {
    f.start_s = start;
    start += f.length;
  }
  hull.perimeter = start;
  return hull;
}

double scene_diameter(const Instance& inst, const TolerancePolicy& tol) {
  const Box b = endpoint_box(inst);
  const double r = circumradius(inst.sum_template(tol));
  return std::hypot(b.x1 - b.x0 + 2.0 * r, b.y1 - b.y0 + 2.0 * r);
}

double oracle_grid(const Instance& inst, const OracleOptions& options,
                   const TolerancePolicy& tol) {
  if (!(options.step > 0.0)) throw InputError("oracle step must be positive");
  check_viable(inst, tol);
  const SumBoundary tmpl = inst.sum_template(tol);
  const double margin =
      options.margin >= 0.0 ? options.margin : 2.0 * circumradius(tmpl);
  const Box b = endpoint_box(inst);
  const double x0 = b.x0 - margin;
  const double y0 = b.y0 - margin;
  const long nx = static_cast<long>(std::floor((b.x1 + margin - x0) / options.step));
  const long ny = static_cast<long>(std::floor((b.y1 + margin - y0) / options.step));
  if ((nx + 1) * (ny + 1) > 50'000'000) throw InputError("oracle grid too fine");
  double best = std::numeric_limits<double>::infinity();
  for (long i = 0; i <= nx; ++i) {
    for (long j = 0; j <= ny; ++j) {
      const Point g{x0 + i * options.step, y0 + j * options.step};
      best = std::min(best, standard_length(inst.a0, inst.a1, inst.b0, inst.b1,
                                            g, tmpl, tol));
      best = std::min(best, standard_length(inst.b0, inst.b1, inst.a0, inst.a1,
                                            g, tmpl, tol));
    }
  }
  return best;
}

CertificateReport certify(const PlanResult& plan, const Instance& inst,
                          const CertifyOptions& options,
                          const TolerancePolicy& tol) {
  CertificateReport r;
  const double length = plan.length();
  const double chords = Distance(inst.a0, inst.a1) + Distance(inst.b0, inst.b1);
  const double dists = Distance(inst.a0, inst.b0) + Distance(inst.a1, inst.b1);
  const double bound = std::min(lower_bound(inst, Turn::kCcw, tol),
                                lower_bound(inst, Turn::kCw, tol));
  r.lower_bound_gap = std::abs(length - bound);
  const double shorter =
      std::min(build_hull_region(inst, HullSide::kTop, tol).perimeter,
               build_hull_region(inst, HullSide::kBottom, tol).perimeter);
  r.hull_identity_residual = std::abs(length - (shorter - chords));
  r.hull_alt_residual = std::abs(length - (shorter - dists));
  const bool first = r.hull_identity_residual <= 1e-6;
  const bool second = r.hull_alt_residual <= 1e-6;
  r.hull_identity_match = first && second ? "both"
                          : first         ? "chords"
                          : second        ? "distances"
                                          : "neither";
  const CoMotion& m = plan.chosen.comotion;
  r.trace_hull_residual =
      std::abs(length - (trace_hull_perimeter(m.path_a) +
                         trace_hull_perimeter(m.path_b) - chords));
  if (options.oracle_step) {
    const double oracle = oracle_grid(inst, {-1.0, *options.oracle_step}, tol);
    r.oracle_gap = oracle - length;
    r.oracle_step = *options.oracle_step;
  }
  r.min_separation = min_separation(m, options.samples);
  r.piece_count_a = piece_count(m.path_a);
  r.piece_count_b = piece_count(m.path_b);
  r.pass = r.lower_bound_gap <= 1e-6 && r.hull_identity_residual <= 1e-6 &&
           r.min_separation >= -1e-9 && r.piece_count_a <= 6 &&
           r.piece_count_b <= 6;
  if (r.oracle_gap) {
    r.pass = r.pass && *r.oracle_gap >= -1e-6 &&
             *r.oracle_gap <= options.oracle_slack_steps * *r.oracle_step;
  }
  return r;
}

}  // namespace ccsduet
