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

#include "ccsduet/planner.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "ccsduet/envelope.h"

namespace ccsduet {
namespace {

// Oriented line through p; n is the unit normal pointing to the "above"
// side.
struct Line {
  Point p;
  Point n;
  Point direction() const { return LeftPerp(n); }
};

// Support lines of s through p. A boundary point yields its one tangent.
std::vector<Line> tangent_lines(Point p, const SumBoundary& s,
                                const TolerancePolicy& tol) {
  const double sd = s.signed_distance(p);
  if (sd < -tol.eps_length) return {};
  if (sd <= tol.eps_length) {
    return {{p, s.orientation_at(p, tol.eps_length).value().unit()}};
  }
  const TangentPair pair = tangents_from_point(p, s, tol);
  std::vector<Line> out;
  for (const TangentLine& t : {pair.upper, pair.lower}) {
    const Point d = t.direction();
    const Point n = t.upper ? RightPerp(d) : LeftPerp(d);
    out.push_back({p, (1.0 / Norm(n)) * n});
  }
  return out;
}

// The tangent from p whose outward normal points most nearly up.
std::optional<Line> upper_tangent(Point p, const SumBoundary& s,
                                  const TolerancePolicy& tol) {
  const std::vector<Line> lines = tangent_lines(p, s, tol);
  if (lines.empty()) return std::nullopt;
  Line best = lines[0];
  for (const Line& l : lines) {
    if (l.n.y > best.n.y) best = l;
  }
  return best;
}

// Points on the line go above after rotating it by +eps_angle about p.
bool above(Point q, const Line& line, const TolerancePolicy& tol) {
  const double d = Dot(q - line.p, line.n);
  if (std::abs(d) > tol.eps_length) return d > 0.0;
  const double c = std::cos(tol.eps_angle);
  const double s = std::sin(tol.eps_angle);
  const Point n{c * line.n.x - s * line.n.y, s * line.n.x + c * line.n.y};
  return Dot(q - line.p, n) >= 0.0;
}

// Whether the line meets the open region of s.
bool line_hits(const Line& line, const SumBoundary& s,
               const TolerancePolicy& tol) {
  const double off = std::abs(Dot(line.p - s.center(), line.n));
  return off < s.relative_reach(Angle(AngleOf(line.n))) - tol.eps_length;
}

bool crossing(const Line& a, const Line& b, const TolerancePolicy& tol,
              Point* out) {
  return intersect_lines(a.p, a.direction(), b.p, b.direction(), tol.eps_angle,
                         out);
}

bool same_point(Point a, Point b, const TolerancePolicy& tol) {
  return Distance(a, b) <= tol.eps_length;
}

// Instance with both robots fixed at one configuration.
bool is_noop(const Instance& inst, const TolerancePolicy& tol) {
  return same_point(inst.a0, inst.a1, tol) && same_point(inst.b0, inst.b1, tol);
}

Candidate single_mover(const Instance& inst, bool moves_a,
                       const TolerancePolicy& tol) {
  const SumBoundary tmpl = inst.sum_template(tol);
  auto sum = std::make_shared<const SumBoundary>(tmpl);
  Turn turn = Turn::kCcw;
  PointPath pa;
  PointPath pb;
  if (moves_a) {
    pa = shortest_path_around(inst.a0, inst.a1, tmpl.placed_at(inst.b0),
                              Side::kEither, &turn, tol);
    pb = PointPath::Stationary(inst.b0);
  } else {
    pa = PointPath::Stationary(inst.a0);
    pb = shortest_path_around(inst.b0, inst.b1, tmpl.placed_at(inst.a0),
                              Side::kEither, &turn, tol);
  }
  Candidate c;
  c.comotion = CoMotion::Decoupled(pa, pb, {{moves_a, moves_a ? pa.length : pb.length}},
                                   sum);
  c.a_int = moves_a ? inst.a1 : inst.a0;
  c.direction = turn;
  c.convex = true;
  c.length = pa.length + pb.length;
  return c;
}

bool normal_form(const Instance& n, const SumBoundary& s,
                 const TolerancePolicy& tol) {
  if (!in_corridor(n.a0, n.b0, n.b1, s, false, tol)) return false;
  return in_corridor(n.a1, n.b0, n.b1, s, false, tol) ||
         in_corridor(n.b0, n.a0, n.a1, s, false, tol);
}

// Points where a line crosses the boundary of s.
std::vector<Point> line_boundary_hits(const Line& line, const SumBoundary& s) {
  const Point d = line.direction();
  auto sd = [&](double t) { return s.signed_distance(line.p + t * d); };
  const double r = Distance(line.p, s.center()) + s.perimeter();
  // The signed distance is convex along the line.
  double lo = -r;
  double hi = r;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < 200 && hi - lo > 1e-13 * r; ++i) {
    const double m1 = hi - g * (hi - lo);
    const double m2 = lo + g * (hi - lo);
    (sd(m1) < sd(m2) ? hi : lo) = sd(m1) < sd(m2) ? m2 : m1;
  }
  const double tmin = 0.5 * (lo + hi);
  if (sd(tmin) >= 0.0) return {};
  auto root = [&](double out, double in) {
    for (int i = 0; i < 200 && std::abs(out - in) > 1e-15 * r; ++i) {
      const double m = 0.5 * (out + in);
      (sd(m) > 0.0 ? out : in) = m;
    }
    return line.p + out * d;
  };
  return {root(-r, tmin), root(r, tmin)};
}

// Points where the boundaries of two placed regions cross.
std::vector<Point> boundary_crossings(const SumBoundary& a,
                                      const SumBoundary& b) {
  constexpr int kSamples = 1440;
  const double per = a.perimeter();
  std::vector<Point> out;
  auto f = [&](double s) { return b.signed_distance(a.point_at(s)); };
  double prev = f(0.0);
  for (int i = 1; i <= kSamples; ++i) {
    double hi = per * i / kSamples;
    const double cur = f(hi);
    if ((prev > 0.0) != (cur > 0.0)) {
      double lo = per * (i - 1) / kSamples;
      const bool lo_out = prev > 0.0;
      for (int k = 0; k < 100; ++k) {
        const double m = 0.5 * (lo + hi);
        ((f(m) > 0.0) == lo_out ? lo : hi) = m;
      }
      out.push_back(a.point_at(lo_out ? lo : hi));
    }
    prev = cur;
  }
  return out;
}

// Intermediate placements worth trying: both endpoints, every crossing of
// two tangent lines from A0 or A1 to the forbidden regions at B0 and B1, and
// every point where such a line or region boundary meets another boundary.
std::vector<Point> a_int_candidates(const NormalizedInstance& n,
                                    const TolerancePolicy& tol) {
  const Instance& in = n.instance;
  const SumBoundary tmpl = in.sum_template(tol);
  const SumBoundary s0 = tmpl.placed_at(in.b0);
  const SumBoundary s1 = tmpl.placed_at(in.b1);
  std::vector<Line> lines;
  for (Point p : {in.a0, in.a1}) {
    for (const SumBoundary* s : {&s0, &s1}) {
      for (const Line& l : tangent_lines(p, *s, tol)) lines.push_back(l);
    }
  }
  std::vector<Point> out = {in.a0, in.a1};
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      Point x;
      if (crossing(lines[i], lines[j], tol, &x)) out.push_back(x);
    }
  }
  for (const Line& l : lines) {
    for (const SumBoundary* s : {&s0, &s1}) {
      for (const Point& p : line_boundary_hits(l, *s)) out.push_back(p);
    }
  }
  for (const Point& p : boundary_crossings(s0, s1)) out.push_back(p);
  std::vector<Point> feasible;
  for (const Point& p : out) {
    if (!IsFinite(p)) continue;
    if (s0.signed_distance(p) < -tol.eps_length ||
        s1.signed_distance(p) < -tol.eps_length) {
      continue;
    }
    feasible.push_back(p);
  }
  return feasible;
}

struct Search {
  std::optional<Candidate> best_convex;
  std::optional<Candidate> best_other;
};

// Best counter-clockwise candidates in the frame of n. The case-selected
// placement is tried first so that it wins ties.
Search search(const NormalizedInstance& n, const TolerancePolicy& tol) {
  std::vector<Point> pts;
  try {
    pts.push_back(select_a_int(classify(n, tol), n, tol));
  } catch (const Error&) {
  }
  for (const Point& p : a_int_candidates(n, tol)) pts.push_back(p);
  Search out;
  for (const Point& p : pts) {
    Candidate c;
    try {
      c = build_standard(n, p, tol);
    } catch (const InputError&) {
      continue;
    }
    std::optional<Candidate>& slot = c.convex ? out.best_convex : out.best_other;
    const double slack = 1e-12 * std::max(1.0, c.length);
    if (!slot || c.length < slot->length - slack) slot = c;
  }
  return out;
}

Turn turn_xor(Turn t, bool flip) { return flip ? opposite(t) : t; }

}  // namespace

SumBoundary Instance::sum_template(const TolerancePolicy& tol) const {
  return minkowski_sum(shape_a, shape_b, {0.0, 0.0}, tol);
}

Instance Instance::transformed(const RigidTransform& t) const {
  Instance out;
  out.shape_a = shape_a.transformed(t);
  out.shape_b = shape_b.transformed(t);
  out.a0 = apply_transform(t, a0);
  out.b0 = apply_transform(t, b0);
  out.a1 = apply_transform(t, a1);
  out.b1 = apply_transform(t, b1);
  return out;
}

Instance Instance::swapped() const {
  return {shape_b, shape_a, b0, a0, b1, a1};
}

Instance Instance::reversed() const {
  return {shape_a, shape_b, a1, b1, a0, b0};
}

void check_viable(const Instance& inst, const TolerancePolicy& tol) {
  for (Point p : {inst.a0, inst.b0, inst.a1, inst.b1}) {
    if (!IsFinite(p)) throw InputError("position is not finite");
  }
  const double s0 = separation(inst.shape_a, inst.a0, inst.shape_b, inst.b0);
  const double s1 = separation(inst.shape_a, inst.a1, inst.shape_b, inst.b1);
  if (s0 < -tol.eps_length) {
    throw NonViableError("initial configuration overlaps: separation(A0, B0) = " +
                         std::to_string(s0));
  }
  if (s1 < -tol.eps_length) {
    throw NonViableError("goal configuration overlaps: separation(A1, B1) = " +
                         std::to_string(s1));
  }
}

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kStraight: return "STRAIGHT";
    case CaseLabel::kB0InACorrAbove: return "B0_IN_ACORR_ABOVE";
    case CaseLabel::kB0InACorrBelow: return "B0_IN_ACORR_BELOW";
    case CaseLabel::kB0InACorrMiddle: return "B0_IN_ACORR_MIDDLE";
    case CaseLabel::kA1AboveBoth: return "A1_ABOVE_BOTH";
    case CaseLabel::kA1BelowBoth: return "A1_BELOW_BOTH";
    case CaseLabel::kA1LeftOfBoth: return "A1_LEFT_OF_BOTH";
    case CaseLabel::kA1RightOfBoth: return "A1_RIGHT_OF_BOTH";
    case CaseLabel::kA1BetweenXTangents: return "A1_BETWEEN_X_TANGENTS";
    case CaseLabel::kA1BelowXTangents: return "A1_BELOW_X_TANGENTS";
    case CaseLabel::kDegenerateFixedB: return "DEGENERATE_FIXED_B";
    case CaseLabel::kDegenerateFixedA: return "DEGENERATE_FIXED_A";
    case CaseLabel::kDegenerateNoop: return "DEGENERATE_NOOP";
  }
  return "UNKNOWN";
}

CaseLabel case_label_from_string(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(CaseLabel::kDegenerateNoop); ++i) {
    const CaseLabel label = static_cast<CaseLabel>(i);
    if (name == to_string(label)) return label;
  }
  throw InputError("unknown case label: " + name);
}

std::optional<Candidate> check_straight_line(const Instance& inst,
                                             const TolerancePolicy& tol) {
  const SumBoundary s = inst.sum_template(tol);
  const double la = Distance(inst.a0, inst.a1);
  const double lb = Distance(inst.b0, inst.b1);
  const bool a0_in_b = in_corridor(inst.a0, inst.b0, inst.b1, s, false, tol);
  const bool b1_in_a = in_corridor(inst.b1, inst.a0, inst.a1, s, false, tol);
  const bool a1_in_b = in_corridor(inst.a1, inst.b0, inst.b1, s, false, tol);
  const bool b0_in_a = in_corridor(inst.b0, inst.a0, inst.a1, s, false, tol);
  bool b_first = false;
  if (!a0_in_b && !b1_in_a) {
    b_first = true;
  } else if (!(!a1_in_b && !b0_in_a)) {
    return std::nullopt;
  }
  Candidate c;
  const PointPath pa = PointPath::Straight(inst.a0, inst.a1);
  const PointPath pb = PointPath::Straight(inst.b0, inst.b1);
  std::vector<CoMotion::Phase> phases;
  if (b_first) {
    phases = {{false, lb}, {true, la}};
  } else {
    phases = {{true, la}, {false, lb}};
  }
  c.comotion = CoMotion::Decoupled(pa, pb, phases,
                                   std::make_shared<const SumBoundary>(s));
  c.a_int = b_first ? inst.a0 : inst.a1;
  c.convex = true;
  c.length = la + lb;
  return c;
}

NormalizedInstance normalize(const Instance& inst, const TolerancePolicy& tol) {
  for (int k = 0; k < 4; ++k) {
    TransformRecord rec;
    rec.swap_roles = k == 1 || k == 3;
    rec.swap_ends = k >= 2;
    Instance l = rec.swap_roles ? inst.swapped() : inst;
    if (rec.swap_ends) l = l.reversed();
    if (same_point(l.b0, l.b1, tol)) continue;
    RigidTransform rot;
    rot.rotation = Angle(-AngleOf(l.b1 - l.b0));
    rec.transform = rot;
    rec.transform.translation = -1.0 * rot.apply_linear(l.b0);
    Instance n = l.transformed(rec.transform);
    n.b0 = {0.0, 0.0};
    n.b1 = {Distance(l.b0, l.b1), 0.0};
    if (!normal_form(n, n.sum_template(tol), tol)) continue;
    return {n, rec};
  }
  throw InvariantError("no relabelling reaches normal form");
}

NormalizedInstance flip(const NormalizedInstance& n) {
  RigidTransform f;
  f.flipped = true;
  NormalizedInstance out;
  out.instance = n.instance.transformed(f);
  out.record = n.record;
  out.record.transform = f.compose(n.record.transform);
  return out;
}

CaseLabel classify(const NormalizedInstance& n, const TolerancePolicy& tol) {
  const Instance& in = n.instance;
  if (same_point(in.a0, in.a1, tol) && same_point(in.b0, in.b1, tol)) {
    return CaseLabel::kDegenerateNoop;
  }
  if (same_point(in.b0, in.b1, tol)) return CaseLabel::kDegenerateFixedB;
  if (same_point(in.a0, in.a1, tol)) return CaseLabel::kDegenerateFixedA;
  const SumBoundary tmpl = in.sum_template(tol);
  const SumBoundary s0 = tmpl.placed_at(in.b0);
  const SumBoundary s1 = tmpl.placed_at(in.b1);
  if (!in_corridor(in.a1, in.b0, in.b1, tmpl, false, tol)) {
    const double top = tmpl.relative_reach(Angle(kPi / 2));
    if (in.a1.y > top + tol.eps_length) return CaseLabel::kB0InACorrAbove;
    const std::optional<Line> ut = upper_tangent(in.a0, s1, tol);
    if (ut && !above(in.a1, *ut, tol)) return CaseLabel::kB0InACorrBelow;
    return CaseLabel::kB0InACorrMiddle;
  }
  const std::optional<Line> u0 = upper_tangent(in.a0, s0, tol);
  const std::optional<Line> u1 = upper_tangent(in.a0, s1, tol);
  if (!u0) throw InvariantError("A0 inside the region around B0");
  if (!u1) {
    return above(in.a1, *u0, tol) ? CaseLabel::kA1AboveBoth
                                  : CaseLabel::kA1LeftOfBoth;
  }
  const bool above0 = above(in.a1, *u0, tol);
  const bool above1 = above(in.a1, *u1, tol);
  const bool crossed = line_hits(*u0, s1, tol) && line_hits(*u1, s0, tol);
  if (above0 && above1) return CaseLabel::kA1AboveBoth;
  if (!above0 && !above1) {
    return crossed ? CaseLabel::kA1BelowXTangents : CaseLabel::kA1BelowBoth;
  }
  if (crossed) return CaseLabel::kA1BetweenXTangents;
  return in.a1.x < in.a0.x ? CaseLabel::kA1LeftOfBoth
                           : CaseLabel::kA1RightOfBoth;
}

Point select_a_int(CaseLabel label, const NormalizedInstance& n,
                   const TolerancePolicy& tol) {
  const Instance& in = n.instance;
  const SumBoundary tmpl = in.sum_template(tol);
  const SumBoundary s0 = tmpl.placed_at(in.b0);
  const SumBoundary s1 = tmpl.placed_at(in.b1);
  auto meet = [&](Point p, const SumBoundary& sp, Point q,
                  const SumBoundary& sq) {
    const std::optional<Line> l = upper_tangent(p, sp, tol);
    const std::optional<Line> m = upper_tangent(q, sq, tol);
    if (!l || !m) throw InvariantError("tangent from inside a forbidden region");
    if (same_point(l->p, m->p, tol)) return l->p;
    Point x;
    if (!crossing(*l, *m, tol, &x)) {
      throw InvariantError("defining tangents are parallel");
    }
    return x;
  };
  switch (label) {
    case CaseLabel::kB0InACorrAbove:
    case CaseLabel::kA1AboveBoth:
      return in.a1;
    case CaseLabel::kB0InACorrBelow:
    case CaseLabel::kA1BelowBoth:
      return in.a0;
    case CaseLabel::kB0InACorrMiddle:
    case CaseLabel::kA1LeftOfBoth:
      return meet(in.a0, s0, in.a1, s1);
    case CaseLabel::kA1RightOfBoth:
      return meet(in.a1, s0, in.a0, s1);
    case CaseLabel::kA1BetweenXTangents:
      return meet(in.a0, s0, in.a0, s1);
    case CaseLabel::kA1BelowXTangents:
      return meet(in.a1, s0, in.a1, s1);
    default:
      throw InvariantError(std::string("no intermediate placement for ") +
                           to_string(label));
  }
}

Candidate build_standard(const NormalizedInstance& n, Point a_int,
                         const TolerancePolicy& tol) {
  const Instance& in = n.instance;
  const SumBoundary tmpl = in.sum_template(tol);
  const SumBoundary s0 = tmpl.placed_at(in.b0);
  const SumBoundary s1 = tmpl.placed_at(in.b1);
  if (s0.signed_distance(a_int) < -tol.eps_length ||
      s1.signed_distance(a_int) < -tol.eps_length) {
    throw InputError("intermediate placement inside a forbidden region");
  }
  PointPath p1 = shortest_path_around(in.a0, a_int, s0, Side::kCcw, nullptr, tol);
  PointPath p2 = shortest_path_around(in.b0, in.b1, tmpl.placed_at(a_int),
                                      Side::kCcw, nullptr, tol);
  PointPath p3 = shortest_path_around(a_int, in.a1, s1, Side::kCcw, nullptr, tol);
  const double l1 = p1.length;
  const double l3 = p3.length;
  PointPath pa = p1;
  pa.append(p3);
  Candidate c;
  c.length = l1 + p2.length + l3;
  c.comotion = CoMotion::Decoupled(
      pa, p2, {{true, l1}, {false, p2.length}, {true, l3}},
      std::make_shared<const SumBoundary>(tmpl));
  c.a_int = a_int;
  c.direction = Turn::kCcw;
  const double hull = trace_hull_perimeter(pa);
  const double chord = Distance(in.a0, in.a1);
  c.convex = std::abs(pa.length + chord - hull) <=
             1e-8 * (1.0 + pa.length);
  return c;
}

Candidate to_original(const Candidate& c, const TransformRecord& record) {
  Candidate out = c;
  out.comotion = c.comotion.transformed(record.transform.inverse());
  if (record.swap_ends) out.comotion = out.comotion.reversed();
  if (record.swap_roles) out.comotion = out.comotion.swapped();
  out.a_int = apply_transform(record.transform.inverse(), c.a_int);
  out.direction =
      turn_xor(c.direction, record.swap_ends != record.transform.flipped);
  return out;
}

AngularInterval turning_range(const Instance& inst, Turn direction,
                              const TolerancePolicy& tol) {
  const SumBoundary s = inst.sum_template(tol);
  const AngularInterval i0 = s.orientation_at(inst.a0 - inst.b0, tol.eps_length).interval;
  const AngularInterval i1 = s.orientation_at(inst.a1 - inst.b1, tol.eps_length).interval;
  if (i0.full || i1.full) return AngularInterval::Full();
  // Counter-clockwise motions sweep from the start of the initial cone to the
  // end of the goal cone; clockwise ones from the end of the initial cone
  // back to the start of the goal cone.
  AngularInterval range = direction == Turn::kCcw
                              ? AngularInterval{i0.start, i1.end, false}
                              : AngularInterval{i1.start, i0.end, false};
  // An end that trails its start by rounding only marks equal orientations.
  if (kTwoPi - range.width() <= tol.eps_angle) {
    range = AngularInterval{range.end, range.start, false};
  }
  return range;
}

double lower_bound(const Instance& inst, Turn direction,
                   const TolerancePolicy& tol) {
  const SumBoundary s = inst.sum_template(tol);
  const AngularInterval range = turning_range(inst, direction, tol);
  std::vector<SupportTerm> terms;
  for (Point a : {inst.a0, inst.a1}) {
    for (Point b : {inst.b0, inst.b1}) terms.push_back(SupportTerm::FromPoint(a - b));
  }
  for (const SupportTerm& t : s.support_terms(range, true)) terms.push_back(t);
  const double perimeter = SupportEnvelope(std::move(terms)).integral();
  return perimeter - Distance(inst.a0, inst.a1) - Distance(inst.b0, inst.b1);
}

double trace_hull_perimeter(const PointPath& path) {
  std::vector<SupportTerm> terms = {SupportTerm::FromPoint(path.start),
                                    SupportTerm::FromPoint(path.end)};
  for (const PathPiece& p : path.pieces) {
    terms.push_back(SupportTerm::FromPoint(p.from));
    terms.push_back(SupportTerm::FromPoint(p.to));
    if (p.kind != PathPiece::Kind::kWalk) continue;
    for (const BoundaryFeature& f :
         walk_pieces(*p.boundary, p.from_s, p.length, p.direction)) {
      terms.push_back(SupportTerm::FromPoint(f.from));
      terms.push_back(SupportTerm::FromPoint(f.to));
      if (f.kind == BoundaryFeature::Kind::kArc && f.radius > 0.0) {
        terms.push_back(SupportTerm::FromArc(f.center, f.radius, f.normal_range));
      }
    }
  }
  return SupportEnvelope(std::move(terms)).integral();
}

int piece_count(const PointPath& path) {
  int n = 0;
  for (const PathPiece& p : path.pieces) {
    if (p.length > 0.0) ++n;
  }
  return n;
}

PlanResult plan(const Instance& inst, const TolerancePolicy& tol) {
  check_viable(inst, tol);
  PlanResult result;
  result.lower_bound_ccw = lower_bound(inst, Turn::kCcw, tol);
  result.lower_bound_cw = lower_bound(inst, Turn::kCw, tol);
  const Turn by_bound = result.lower_bound_cw < result.lower_bound_ccw
                            ? Turn::kCw
                            : Turn::kCcw;
  if (std::optional<Candidate> straight = check_straight_line(inst, tol)) {
    straight->direction = by_bound;
    // Equal bounds leave the label free. A decoupled straight motion can turn
    // against the default, so keep the sense its orientation can follow.
    const double tie = 1e-9 * std::max(1.0, straight->length);
    if (std::abs(result.lower_bound_ccw - result.lower_bound_cw) <= tie) {
      const CoMotion& m = straight->comotion;
      const Turn other = opposite(by_bound);
      if (!is_orientation_monotone(make_orientation_monotone(m, by_bound),
                                   by_bound, 10000) &&
          is_orientation_monotone(make_orientation_monotone(m, other), other,
                                  10000)) {
        straight->direction = other;
      }
    }
    result.chosen = *straight;
    result.label = is_noop(inst, tol) ? CaseLabel::kDegenerateNoop
                                      : CaseLabel::kStraight;
    return result;
  }
  if (same_point(inst.b0, inst.b1, tol)) {
    result.chosen = single_mover(inst, true, tol);
    result.label = CaseLabel::kDegenerateFixedB;
  } else if (same_point(inst.a0, inst.a1, tol)) {
    result.chosen = single_mover(inst, false, tol);
    result.label = CaseLabel::kDegenerateFixedA;
  } else {
    const NormalizedInstance n = normalize(inst, tol);
    const NormalizedInstance f = flip(n);
    result.label = classify(n, tol);
    result.record = n.record;
    std::optional<Candidate> best;
    for (const NormalizedInstance* frame : {&n, &f}) {
      const Search s = search(*frame, tol);
      if (s.best_convex) {
        const Candidate c = to_original(*s.best_convex, frame->record);
        const double tie = 1e-9;
        if (!best || c.length < best->length - tie ||
            (c.length <= best->length + tie && c.direction == Turn::kCcw &&
             best->direction == Turn::kCw)) {
          best = c;
        }
      }
      if (s.best_other) {
        const Candidate c = to_original(*s.best_other, frame->record);
        if (!result.rejected || c.length < result.rejected->length) {
          result.rejected = c;
        }
      }
    }
    if (!best) throw InvariantError("no convex candidate in either direction");
    result.chosen = *best;
  }
  const double bound = std::min(result.lower_bound_ccw, result.lower_bound_cw);
  if (result.chosen.length < bound - 1e-6) {
    throw InvariantError("planned length is below the lower bound");
  }
  return result;
}

}  // namespace ccsduet
