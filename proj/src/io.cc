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

#include "ccsduet/io.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <memory>
#include <sstream>

#include "json.hpp"

namespace ccsduet {
namespace {

using Json = nlohmann::json;

Json point_json(Point p) { return Json::array({p.x, p.y}); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Point parse_point(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw InputError(std::string(what) + " must be an [x, y] pair");
  }
  return {number(j[0], what), number(j[1], what)};
}

Turn parse_turn(const Json& j) {
  if (j == "ccw") return Turn::kCcw;
  if (j == "cw") return Turn::kCw;
  throw InputError("direction must be \"ccw\" or \"cw\"");
}

CcsShape parse_shape(const Json& j, const char* robot,
                     const TolerancePolicy& tol) {
  const std::string name(robot);
  const Json& type = field(j, "type");
  try {
    if (type == "disc") return CcsShape::Disc(number(field(j, "radius"), "radius"));
    if (type == "polygon") {
      const Json& vs = field(j, "vertices");
      if (!vs.is_array()) throw InputError("vertices must be a list");
      std::vector<Point> pts;
      for (const Json& v : vs) pts.push_back(parse_point(v, "vertex"));
      return CcsShape::Polygon(std::move(pts), tol);
    }
  } catch (const InputError& e) {
    throw InputError(name + ": " + e.what());
  }
  throw InputError(name + ": type must be \"disc\" or \"polygon\"");
}

Json shape_json(const CcsShape& s) {
  if (s.is_disc()) return {{"type", "disc"}, {"radius", s.radius()}};
  Json vs = Json::array();
  for (Point v : s.vertices()) vs.push_back(point_json(v));
  return {{"type", "polygon"}, {"vertices", vs}};
}

Json report_json(const CertificateReport& r) {
  Json j = {{"lower_bound_gap", r.lower_bound_gap},
            {"hull_identity_residual", r.hull_identity_residual},
            {"hull_alt_residual", r.hull_alt_residual},
            {"hull_identity_match", r.hull_identity_match},
            {"trace_hull_residual", r.trace_hull_residual},
            {"min_separation", r.min_separation},
            {"piece_count_a", r.piece_count_a},
            {"piece_count_b", r.piece_count_b},
            {"pass", r.pass}};
  j["oracle_gap"] = r.oracle_gap ? Json(*r.oracle_gap) : Json(nullptr);
  j["oracle_step"] = r.oracle_step ? Json(*r.oracle_step) : Json(nullptr);
  return j;
}

Json feature_json(const SumBoundary& sum, const BoundaryFeature& f) {
  const size_t index = sum.feature_at(f.start_s + 0.5 * f.length);
  const Point from = f.reversed ? f.to : f.from;
  const Point to = f.reversed ? f.from : f.to;
  if (f.kind == BoundaryFeature::Kind::kSegment) {
    return {{"feature", index}, {"type", "segment"}, {"from", point_json(from)},
            {"to", point_json(to)}, {"length", f.length}};
  }
  const double a0 = f.reversed ? f.to_angle.value() : f.from_angle.value();
  const double a1 = f.reversed ? f.from_angle.value() : f.to_angle.value();
  return {{"feature", index}, {"type", "arc"}, {"center", point_json(f.center)},
          {"radius", f.radius}, {"from_angle", a0}, {"to_angle", a1},
          {"length", f.length}};
}

Json path_json(const PointPath& path) {
  Json pieces = Json::array();
  for (const PathPiece& p : path.pieces) {
    if (p.kind == PathPiece::Kind::kSegment) {
      pieces.push_back({{"type", "segment"}, {"from", point_json(p.from)},
                        {"to", point_json(p.to)}, {"length", p.length}});
      continue;
    }
    Json features = Json::array();
    for (const BoundaryFeature& f :
         walk_pieces(*p.boundary, p.from_s, p.length, p.direction)) {
      if (f.length > 0.0) features.push_back(feature_json(*p.boundary, f));
    }
    pieces.push_back({{"type", "walk"},
                      {"center", point_json(p.boundary->center())},
                      {"from", point_json(p.from)},
                      {"to", point_json(p.to)},
                      {"direction", to_string(p.direction)},
                      {"length", p.length},
                      {"features", features}});
  }
  return {{"start", point_json(path.start)}, {"end", point_json(path.end)},
          {"length", path.length}, {"pieces", pieces}};
}

Json schedule_json(const CoMotion& m) {
  Json out = Json::array();
  for (const ScheduleSegment& s : m.schedule) {
    Json j = {{"kind", s.kind == ScheduleSegment::Kind::kLinear ? "linear" : "sliding"},
              {"t", {s.t0, s.t1}},
              {"a", {s.a0, s.a1}},
              {"b", {s.b0, s.b1}}};
    if (s.kind == ScheduleSegment::Kind::kSliding) {
      j["boundary_from"] = point_json(m.sum->point_at(s.s0));
      j["span"] = s.s1 - s.s0;
      j["c0"] = point_json(s.c0);
      j["c1"] = point_json(s.c1);
    }
    out.push_back(j);
  }
  return out;
}

PointPath parse_path(const Json& j, const Instance& inst, const char* robot,
                     const TolerancePolicy& tol) {
  PointPath path;
  path.start = parse_point(field(j, "start"), "path start");
  path.end = parse_point(field(j, "end"), "path end");
  const Json& pieces = field(j, "pieces");
  if (!pieces.is_array()) throw InputError(std::string(robot) + ": pieces must be a list");
  for (const Json& pj : pieces) {
    PathPiece piece;
    piece.from = parse_point(field(pj, "from"), "piece from");
    piece.to = parse_point(field(pj, "to"), "piece to");
    const Json& type = field(pj, "type");
    if (type == "segment") {
      piece.length = Distance(piece.from, piece.to);
    } else if (type == "walk") {
      const Point center = parse_point(field(pj, "center"), "walk center");
      auto boundary = std::make_shared<const SumBoundary>(
          minkowski_sum(inst.shape_a, inst.shape_b, center, tol));
      const Turn dir = parse_turn(field(pj, "direction"));
      BoundaryWalk walk;
      try {
        walk = boundary_walk(*boundary, piece.from, piece.to, dir, tol);
      } catch (const InputError& e) {
        throw InputError(std::string(robot) + ": walk " + e.what());
      }
      piece.kind = PathPiece::Kind::kWalk;
      piece.length = walk.length;
      piece.boundary = std::move(boundary);
      piece.from_s = walk.from_s;
      piece.direction = dir;
    } else {
      throw InputError(std::string(robot) + ": piece type must be \"segment\" or \"walk\"");
    }
    path.pieces.push_back(piece);
    path.length += piece.length;
  }
  return path;
}

double continuity_error(const PointPath& path, Point start, Point end) {
  double err = std::max(Distance(path.start, start), Distance(path.end, end));
  Point at = path.start;
  for (const PathPiece& p : path.pieces) {
    err = std::max(err, Distance(at, p.point_at(0.0)));
    at = p.point_at(p.length);
  }
  return std::max(err, Distance(at, path.end));
}

double schedule_error(const CoMotion& m) {
  if (m.schedule.empty()) return std::numeric_limits<double>::infinity();
  const ScheduleSegment& first = m.schedule.front();
  const ScheduleSegment& last = m.schedule.back();
  double err = std::max({std::abs(first.t0), std::abs(last.t1 - 1.0),
                         std::abs(first.a0), std::abs(first.b0),
                         std::abs(last.a1 - m.path_a.length),
                         std::abs(last.b1 - m.path_b.length)});
  for (size_t i = 0; i < m.schedule.size(); ++i) {
    const ScheduleSegment& s = m.schedule[i];
    if (!(s.t1 >= s.t0)) return std::numeric_limits<double>::infinity();
    if (i == 0) continue;
    const ScheduleSegment& p = m.schedule[i - 1];
    err = std::max({err, std::abs(s.t0 - p.t1), std::abs(s.a0 - p.a1),
                    std::abs(s.b0 - p.b1)});
  }
  return err;
}

// Polyline through n + 1 samples of a path.
std::string polyline(const PointPath& path, int n) {
  std::ostringstream out;
  out << std::setprecision(6);
  for (int k = 0; k <= n; ++k) {
    const Point p = path.point_at(path.length * k / n);
    out << (k ? " " : "") << p.x << "," << p.y;
  }
  return out.str();
}

std::string outline(const SumBoundary& s, int n) {
  std::ostringstream out;
  out << std::setprecision(6);
  for (int k = 0; k < n; ++k) {
    const Point p = s.point_at(s.perimeter() * k / n);
    out << (k ? " " : "") << p.x << "," << p.y;
  }
  return out.str();
}

void draw_robot(std::ostringstream& out, const CcsShape& shape, Point at,
                const char* color) {
  if (shape.is_disc()) {
    out << "<circle cx=\"" << at.x << "\" cy=\"" << at.y << "\" r=\""
        << shape.radius() << "\" fill=\"" << color
        << "\" fill-opacity=\"0.35\" stroke=\"" << color << "\"/>\n";
    return;
  }
  out << "<polygon points=\"";
  bool first = true;
  for (Point v : shape.vertices()) {
    out << (first ? "" : " ") << at.x + v.x << "," << at.y + v.y;
    first = false;
  }
  out << "\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
      << "\"/>\n";
}

}  // namespace

Instance parse_scene(std::string_view text, const TolerancePolicy& tol) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("scene is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("scene must be a JSON object");
  return Instance{parse_shape(field(j, "robot_a"), "robot_a", tol),
                  parse_shape(field(j, "robot_b"), "robot_b", tol),
                  parse_point(field(j, "a0"), "a0"),
                  parse_point(field(j, "b0"), "b0"),
                  parse_point(field(j, "a1"), "a1"),
                  parse_point(field(j, "b1"), "b1")};
}

std::string scene_to_json(const Instance& inst) {
  const Json j = {{"robot_a", shape_json(inst.shape_a)},
                  {"robot_b", shape_json(inst.shape_b)},
                  {"a0", point_json(inst.a0)},
                  {"b0", point_json(inst.b0)},
                  {"a1", point_json(inst.a1)},
                  {"b1", point_json(inst.b1)}};
  return j.dump(2) + "\n";
}

std::string result_to_json(const PlanResult& plan, const Instance& inst,
                           const CertificateReport& report) {
  const CoMotion& m = plan.chosen.comotion;
  const bool has_int = plan.label != CaseLabel::kStraight &&
                       plan.label != CaseLabel::kDegenerateFixedA &&
                       plan.label != CaseLabel::kDegenerateFixedB &&
                       plan.label != CaseLabel::kDegenerateNoop;
  Json j = {{"length", plan.length()},
            {"direction", to_string(plan.direction())},
            {"case", to_string(plan.label)},
            {"a_int", has_int ? point_json(plan.chosen.a_int) : Json(nullptr)},
            {"lower_bound_ccw", plan.lower_bound_ccw},
            {"lower_bound_cw", plan.lower_bound_cw},
            {"convex", plan.chosen.convex},
            {"certificate", report_json(report)},
            {"scene", Json::parse(scene_to_json(inst))},
            {"robot_a", path_json(m.path_a)},
            {"robot_b", path_json(m.path_b)},
            {"schedule", schedule_json(m)},
            {"phase_marks", m.phase_marks}};
  if (plan.rejected) j["rejected_length"] = plan.rejected->length;
  return j.dump(2) + "\n";
}

ResultDocument parse_result(std::string_view text, const Instance& inst,
                            const TolerancePolicy& tol) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("result is not valid JSON: ") + e.what());
  }
  ResultDocument doc;
  doc.length = number(field(j, "length"), "length");
  doc.direction = parse_turn(field(j, "direction"));
  const Json& label = field(j, "case");
  if (!label.is_string()) throw InputError("case must be a string");
  doc.label = case_label_from_string(label.get<std::string>());

  CoMotion& m = doc.comotion;
  m.path_a = parse_path(field(j, "robot_a"), inst, "robot_a", tol);
  m.path_b = parse_path(field(j, "robot_b"), inst, "robot_b", tol);
  m.sum = std::make_shared<const SumBoundary>(inst.sum_template(tol));
  const Json& schedule = field(j, "schedule");
  if (!schedule.is_array()) throw InputError("schedule must be a list");
  for (const Json& sj : schedule) {
    ScheduleSegment s;
    const Point t = parse_point(field(sj, "t"), "schedule t");
    const Point a = parse_point(field(sj, "a"), "schedule a");
    const Point b = parse_point(field(sj, "b"), "schedule b");
    s.t0 = t.x;
    s.t1 = t.y;
    s.a0 = a.x;
    s.a1 = a.y;
    s.b0 = b.x;
    s.b1 = b.y;
    const Json& kind = field(sj, "kind");
    if (kind == "sliding") {
      s.kind = ScheduleSegment::Kind::kSliding;
      s.s0 = m.sum->locate(parse_point(field(sj, "boundary_from"), "boundary_from"));
      s.s1 = s.s0 + number(field(sj, "span"), "span");
      s.c0 = parse_point(field(sj, "c0"), "c0");
      s.c1 = parse_point(field(sj, "c1"), "c1");
    } else if (kind != "linear") {
      throw InputError("schedule kind must be \"linear\" or \"sliding\"");
    }
    m.schedule.push_back(s);
  }
  if (j.contains("phase_marks")) {
    for (const Json& t : j.at("phase_marks")) m.phase_marks.push_back(number(t, "phase mark"));
  }
  return doc;
}

ValidationReport validate_result(const ResultDocument& doc, const Instance& inst,
                                 int samples, const TolerancePolicy& tol) {
  if (samples < 2) throw InputError("samples must be at least 2");
  ValidationReport v;
  const CoMotion& m = doc.comotion;
  const double scale = std::max(1.0, m.length());
  v.length_residual = std::abs(doc.length - m.length());
  v.continuity_error = std::max(continuity_error(m.path_a, inst.a0, inst.a1),
                                continuity_error(m.path_b, inst.b0, inst.b1));
  v.schedule_error = schedule_error(m);

  PlanResult claimed;
  claimed.chosen.comotion = m;
  claimed.chosen.length = doc.length;
  claimed.chosen.direction = doc.direction;
  claimed.label = doc.label;
  CertifyOptions options;
  options.samples = samples;
  v.certificate = certify(claimed, inst, options, tol);

  std::vector<std::string> failed;
  if (v.length_residual > 1e-9 * scale) failed.push_back("length");
  if (v.continuity_error > 1e-9 * scale) failed.push_back("continuity");
  if (!(v.schedule_error <= 1e-9 * scale)) failed.push_back("schedule");
  if (v.certificate.lower_bound_gap > 1e-6) failed.push_back("lower_bound");
  if (v.certificate.hull_identity_residual > 1e-6) failed.push_back("hull_identity");
  if (v.certificate.min_separation < -1e-9) failed.push_back("separation");
  if (v.certificate.piece_count_a > 6 || v.certificate.piece_count_b > 6) {
    failed.push_back("pieces");
  }
  for (size_t i = 0; i < failed.size(); ++i) {
    v.failures += (i ? "," : "") + failed[i];
  }
  v.pass = failed.empty() && v.certificate.pass;
  return v;
}

std::string render_svg(const Instance& inst, const PlanResult& plan) {
  const SumBoundary tmpl = inst.sum_template();
  double reach = 0.0;
  for (int k = 0; k < 360; ++k) reach = std::max(reach, tmpl.reach(Angle(kTwoPi * k / 360)));
  double x0 = inst.a0.x, x1 = x0, y0 = inst.a0.y, y1 = y0;
  for (Point p : {inst.b0, inst.a1, inst.b1}) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  x0 -= reach;
  y0 -= reach;
  x1 += reach;
  y1 += reach;
  const double w = x1 - x0;
  const double h = y1 - y0;
  const double stroke = 0.004 * std::max(w, h);

  std::ostringstream out;
  out << std::setprecision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
      << std::lround(800.0 * h / w) << "\" viewBox=\"" << x0 << " " << -y1 << " "
      << w << " " << h << "\">\n";
  out << "<g transform=\"scale(1,-1)\" stroke-width=\"" << stroke << "\">\n";
  for (Point c : {inst.b0, inst.b1}) {
    const SumBoundary ghost = minkowski_sum(inst.shape_a, inst.shape_b, c);
    out << "<polygon points=\"" << outline(ghost, 360)
        << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"" << 4 * stroke
        << "\"/>\n";
  }
  draw_robot(out, inst.shape_a, inst.a0, "green");
  draw_robot(out, inst.shape_b, inst.b0, "green");
  draw_robot(out, inst.shape_a, inst.a1, "red");
  draw_robot(out, inst.shape_b, inst.b1, "red");
  const CoMotion& m = plan.chosen.comotion;
  for (const PointPath* path : {&m.path_a, &m.path_b}) {
    out << "<polyline points=\"" << polyline(*path, 400)
        << "\" fill=\"none\" stroke=\"blue\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace ccsduet
