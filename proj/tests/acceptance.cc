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

// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance <path to the ccsduet command-line tool> [work dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccsduet/envelope.h"
#include "ccsduet/io.h"
#include "ccsduet/motion.h"
#include "ccsduet/pathfind.h"
#include "ccsduet/planner.h"
#include "ccsduet/verify.h"
#include "json.hpp"
#include "test_util.h"

namespace ccsduet {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;
using testing::DenseSumOutline;
using testing::RandomInstance;
using testing::RandomShape;
using testing::RandomTransform;
using testing::ShapeReach;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

int failures = 0;

void Report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", id, name,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct Planned {
  Instance instance;
  PlanResult plan;
};

// Mixed corpus: disc/disc, disc/polygon and polygon/polygon in turn. The
// endpoint range is small enough that most instances need a detour.
std::vector<Planned> Corpus(int n, unsigned seed, double* seconds) {
  std::mt19937 rng(seed);
  std::vector<Planned> out;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    Planned p{RandomInstance(rng, i % 3, 2.5), {}};
    const auto t0 = Clock::now();
    p.plan = plan(p.instance);
    total += Seconds(t0);
    out.push_back(std::move(p));
  }
  *seconds = total;
  return out;
}

void Tightness(const std::vector<Planned>& corpus, double plan_seconds) {
  double worst = 0.0;
  int bad = 0;
  int detours = 0;
  for (const Planned& p : corpus) {
    const double bound = std::min(p.plan.lower_bound_ccw, p.plan.lower_bound_cw);
    const double gap = std::abs(p.plan.length() - bound);
    worst = std::max(worst, gap);
    if (gap > 1e-6) ++bad;
    if (p.plan.label != CaseLabel::kStraight) ++detours;
  }
  Report(1, "tightness", bad == 0 && plan_seconds < 60.0,
         Fmt("%zu instances (%d non-straight), max |length - lower bound| %.2e, "
             "%d over 1e-6, planning %.1f s",
             corpus.size(), detours, worst, bad, plan_seconds));
}

void HullIdentity(const std::vector<Planned>& corpus) {
  double worst = 0.0;
  double worst_alt = 0.0;
  int chords = 0;
  int distances = 0;
  int bad = 0;
  for (const Planned& p : corpus) {
    const Instance& in = p.instance;
    const double shorter =
        std::min(build_hull_region(in, HullSide::kTop).perimeter,
                 build_hull_region(in, HullSide::kBottom).perimeter);
    const double r1 = std::abs(p.plan.length() -
                               (shorter - Distance(in.a0, in.a1) - Distance(in.b0, in.b1)));
    const double r2 = std::abs(p.plan.length() -
                               (shorter - Distance(in.a0, in.b0) - Distance(in.a1, in.b1)));
    worst = std::max(worst, r1);
    worst_alt = std::max(worst_alt, r2);
    if (r1 <= 1e-9) ++chords;
    if (r2 <= 1e-9) ++distances;
    if (r1 > 1e-9) ++bad;
  }
  const std::string match = chords == static_cast<int>(corpus.size())
                                ? "|A0A1| + |B0B1| (chords)"
                                : distances == static_cast<int>(corpus.size())
                                      ? "|A0B0| + |A1B1|"
                                      : "neither subtraction on every instance";
  Report(2, "hull identity", bad == 0,
         Fmt("max residual %.2e with chords subtracted (%d/%zu within 1e-9); "
             "shorter-boundary variant minus |A0B0| + |A1B1|: max residual %.2e "
             "(%d/%zu); matching subtraction: %s",
             worst, chords, corpus.size(), worst_alt, distances, corpus.size(),
             match.c_str()));
}

void OracleDominance(const std::vector<Planned>& corpus) {
  const auto t0 = Clock::now();
  struct Row {
    size_t index;
    double gap;
    double step;
  };
  std::vector<Row> rows;
  int bad = 0;
  double worst_ratio = 0.0;
  double most_negative = 0.0;
  for (size_t i = 0; i < 50 && i < corpus.size(); ++i) {
    const Instance& in = corpus[i].instance;
    const double step = 0.01 * scene_diameter(in);
    const double gap = oracle_grid(in, {-1.0, step}) - corpus[i].plan.length();
    rows.push_back({i, gap, step});
    most_negative = std::min(most_negative, gap);
    worst_ratio = std::max(worst_ratio, gap / step);
    if (gap < -1e-6 || gap > 5 * step) ++bad;
  }
  // Halving: the ten instances with the largest coarse gaps.
  std::vector<Row> subset = rows;
  std::sort(subset.begin(), subset.end(),
            [](const Row& a, const Row& b) { return a.gap > b.gap; });
  subset.resize(std::min<size_t>(10, subset.size()));
  double coarse = 0.0;
  double fine = 0.0;
  for (const Row& r : subset) {
    const Instance& in = corpus[r.index].instance;
    coarse = std::max(coarse, r.gap);
    fine = std::max(fine, oracle_grid(in, {-1.0, 0.5 * r.step}) - corpus[r.index].plan.length());
  }
  const bool halves = fine <= 0.5 * coarse + 1e-12;
  const double secs = Seconds(t0);
  Report(3, "oracle dominance", bad == 0 && halves && secs < 300.0,
         Fmt("50 instances: min oracle - length %.2e, max %.2f steps, %d outside "
             "[-1e-6, 5 steps]; halving on 10: max gap %.3e -> %.3e (ratio %.2f); %.1f s",
             most_negative, worst_ratio, bad, coarse, fine,
             coarse > 0 ? fine / coarse : 0.0, secs));
}

void Pieces(const std::vector<Planned>& corpus) {
  int worst = 0;
  for (const Planned& p : corpus) {
    worst = std::max({worst, piece_count(p.plan.chosen.comotion.path_a),
                      piece_count(p.plan.chosen.comotion.path_b)});
  }
  Report(4, "six-piece bound", worst <= 6,
         Fmt("max pieces per robot trace %d over %zu plans", worst, corpus.size()));
}

struct Deferred {
  bool pass = false;
  std::string detail;
};

// Criterion 8 is measured with criterion 5 but reported in order.
Deferred Reparameterizations(const std::vector<Planned>& corpus) {
  double worst_sep = 1e300;
  int collisions = 0;
  int not_monotone = 0;
  int split_contacts = 0;
  int split_before = 0;
  int length_changed = 0;
  int motions = 0;
  for (const Planned& p : corpus) {
    const CoMotion& m = p.plan.chosen.comotion;
    const Turn dir = p.plan.direction();
    const CoMotion mono = make_orientation_monotone(m, dir);
    const CoMotion contact = make_contact_preserving(m, dir);
    const CoMotion both = make_contact_preserving(mono, dir);
    for (const CoMotion* x : {&m, &mono, &contact, &both}) {
      const double sep = min_separation(*x, 10000);
      worst_sep = std::min(worst_sep, sep);
      if (sep < -1e-9) ++collisions;
      ++motions;
    }
    if (!is_orientation_monotone(mono, dir, 10000)) ++not_monotone;
    if (contact_intervals(m, 10000).size() > 1) ++split_before;
    if (contact_intervals(contact, 10000).size() > 1) ++split_contacts;
    for (const CoMotion* x : {&mono, &contact}) {
      if (std::abs(x->length() - m.length()) > 1e-9 ||
          std::abs(x->path_a.length - m.path_a.length) > 1e-9) {
        ++length_changed;
      }
    }
  }
  Report(5, "collision-freeness", collisions == 0,
         Fmt("%d motions (plans, both reparameterizations and their composition), min separation %.2e, "
             "%d below -1e-9",
             motions, worst_sep, collisions));
  return {not_monotone == 0 && split_contacts == 0 && length_changed == 0,
          Fmt("%zu plans: %d not orientation-monotone after repair; split contact "
              "on %d before and %d after sliding repair; %d length changes",
              corpus.size(), not_monotone, split_before, split_contacts,
              length_changed)};
}

// Oracle: corridor membership against a dense outline of the sum.
bool OutsideCorridor(Point p, Point q0, Point q1, const CcsShape& a,
                     const CcsShape& b, double margin) {
  std::vector<Point> pts = DenseSumOutline(a, b, q0, 720);
  const std::vector<Point> more = DenseSumOutline(a, b, q1, 720);
  pts.insert(pts.end(), more.begin(), more.end());
  const std::vector<Point> hull = convex_hull(pts);
  return signed_distance_convex(p, hull) > margin;
}

void StraightCases() {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> pos(-6.0, 6.0);
  int built = 0;
  int bad = 0;
  double worst = 0.0;
  while (built < 100) {
    const int kind = built % 3;
    const CcsShape a = RandomShape(rng, kind != 2);
    const CcsShape b = RandomShape(rng, kind == 0);
    const Instance in{a, b, {pos(rng), pos(rng)}, {pos(rng), pos(rng)},
                      {pos(rng), pos(rng)}, {pos(rng), pos(rng)}};
    const bool b_first = OutsideCorridor(in.a0, in.b0, in.b1, a, b, 0.05) &&
                         OutsideCorridor(in.b1, in.a0, in.a1, a, b, 0.05);
    const bool a_first = OutsideCorridor(in.a1, in.b0, in.b1, a, b, 0.05) &&
                         OutsideCorridor(in.b0, in.a0, in.a1, a, b, 0.05);
    if (!b_first && !a_first) continue;
    // Both straight orderings must start and end viable.
    if (separation(a, in.a0, b, in.b0) < 0.05 || separation(a, in.a1, b, in.b1) < 0.05) continue;
    ++built;
    const PlanResult p = plan(in);
    const double expect = Distance(in.a0, in.a1) + Distance(in.b0, in.b1);
    const double err = std::abs(p.length() - expect);
    worst = std::max(worst, err);
    if (err > 1e-12 || p.label != CaseLabel::kStraight) ++bad;
  }
  Report(6, "straight-line cases", bad == 0,
         Fmt("100 constructed instances, max |length - |A0A1| - |B0B1|| %.2e, %d "
             "not STRAIGHT or off",
             worst, bad));
}

void Invariance(const std::vector<Planned>& corpus) {
  std::mt19937 rng(202);
  double worst = 0.0;
  int bad = 0;
  int flips_checked = 0;
  int flips_wrong = 0;
  const size_t n = std::min<size_t>(200, corpus.size());
  for (size_t i = 0; i < n; ++i) {
    const Instance& in = corpus[i].instance;
    const PlanResult& p = corpus[i].plan;
    const double len = p.length();
    const PlanResult moved = plan(in.transformed(RandomTransform(rng, false)));
    const PlanResult flipped = plan(in.transformed(RandomTransform(rng, true)));
    const PlanResult swapped = plan(in.swapped());
    const PlanResult reversed = plan(in.reversed());
    for (const PlanResult* q : {&moved, &flipped, &swapped, &reversed}) {
      const double d = std::abs(q->length() - len);
      worst = std::max(worst, d);
      if (d > 1e-9) ++bad;
    }
    const bool tie = std::abs(p.lower_bound_ccw - p.lower_bound_cw) <= 1e-9;
    if (!tie) {
      ++flips_checked;
      if (flipped.direction() != opposite(p.direction())) ++flips_wrong;
    }
  }
  Report(7, "invariance", bad == 0 && flips_wrong == 0,
         Fmt("%zu instances x 4 transforms, max length change %.2e; flip swapped "
             "the direction on %d/%d untied instances",
             n, worst, flips_checked - flips_wrong, flips_checked));
}

double ShapePerimeter(const CcsShape& s) {
  if (s.is_disc()) return kTwoPi * s.radius();
  double per = 0.0;
  const auto& v = s.vertices();
  for (size_t i = 0; i < v.size(); ++i) per += Distance(v[i], v[(i + 1) % v.size()]);
  return per;
}

void Kernel() {
  std::mt19937 rng(303);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst_cauchy = 0.0;
  double worst_additive = 0.0;
  double worst_reach = 0.0;
  double worst_tangent = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const CcsShape a = RandomShape(rng, trial % 3 == 0);
    const CcsShape b = RandomShape(rng, trial % 4 == 1);
    const Point c{u(rng), u(rng)};
    const SumBoundary s = minkowski_sum(a, b, c);
    std::vector<double> breaks;
    for (const BoundaryFeature& f : s.features()) breaks.push_back(f.normal_range.start.value());
    const double cauchy = integrate_circle(
        [&](double t) { return ShapeReach(a, t) + ShapeReach(b, t); }, breaks, 1e-10);
    worst_cauchy = std::max(worst_cauchy, std::abs(cauchy - s.perimeter()) / s.perimeter());
    worst_additive = std::max(worst_additive,
                              std::abs(ShapePerimeter(a) + ShapePerimeter(b) - s.perimeter()) /
                                  s.perimeter());
    for (int k = 0; k < 360; ++k) {
      const double t = kTwoPi * k / 360;
      worst_reach = std::max(worst_reach, std::abs(s.relative_reach(Angle(t)) -
                                                   ShapeReach(a, t) - ShapeReach(b, t)));
    }
    for (int k = 0; k < 20; ++k) {
      const Point p{c.x + 2 * u(rng), c.y + 2 * u(rng)};
      if (s.signed_distance(p) < 1e-3) continue;
      const TangentPair tp = tangents_from_point(p, s);
      for (const TangentLine& t : {tp.upper, tp.lower}) {
        const Point d = t.direction();
        const Point n = (1.0 / Norm(d)) * (t.upper ? RightPerp(d) : LeftPerp(d));
        const double th = AngleOf(n);
        const double exact = ShapeReach(a, th) + ShapeReach(b, th) + Dot(n, c);
        worst_tangent = std::max({worst_tangent, std::abs(exact - Dot(n, t.touch)),
                                  std::abs(Dot(n, p) - Dot(n, t.touch))});
      }
    }
  }
  Report(9, "geometry kernel",
         worst_cauchy <= 1e-6 && worst_additive <= 1e-6 && worst_reach <= 1e-9 &&
             worst_tangent <= 1e-9,
         Fmt("50 sums: Cauchy vs exact perimeter %.2e rel (additivity %.2e), reach "
             "additivity at 360 angles %.2e, tangent support lines %.2e",
             worst_cauchy, worst_additive, worst_reach, worst_tangent));
}

struct Run {
  int exit_code = -1;
  std::string output;
};

Run Execute(const std::string& command) {
  Run r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void CliRoundTrip(const std::string& tool, const fs::path& work) {
  fs::remove_all(work);
  const fs::path scenes = work / "scenes";
  const fs::path results = work / "results";
  fs::create_directories(scenes);
  fs::create_directories(results);
  std::mt19937 rng(404);
  std::vector<std::string> names;
  for (int i = 0; i < 50; ++i) {
    const std::string name = Fmt("scene_%02d", i);
    WriteFile(scenes / (name + ".json"), scene_to_json(RandomInstance(rng, i % 3, 2.5)));
    names.push_back(name);
  }
  int round_trip_failures = 0;
  for (const std::string& name : names) {
    const fs::path scene = scenes / (name + ".json");
    const fs::path result = results / (name + ".json");
    const Run p = Execute(tool + " plan " + scene.string() + " -o " + result.string());
    const Run v = Execute(tool + " validate " + result.string() + " " + scene.string());
    if (p.exit_code != 0 || v.exit_code != 0) {
      ++round_trip_failures;
      std::printf("  %s: plan exit %d, validate exit %d\n%s%s", name.c_str(), p.exit_code,
                  v.exit_code, p.output.c_str(), v.output.c_str());
    }
  }

  // Injected faults on the first scene whose plan detours.
  std::string base;
  for (const std::string& name : names) {
    const Json r = Json::parse(ReadFile(results / (name + ".json")));
    if (r["case"] != "STRAIGHT") {
      base = name;
      break;
    }
  }
  const fs::path scene = scenes / (base + ".json");
  Json inflated = Json::parse(ReadFile(results / (base + ".json")));
  inflated["length"] = inflated["length"].get<double>() * 1.01;
  WriteFile(work / "inflated.json", inflated.dump());
  const Run inflated_run =
      Execute(tool + " validate " + (work / "inflated.json").string() + " " + scene.string());

  // Robot A cuts straight across robot B's start.
  Json collided = Json::parse(ReadFile(results / (base + ".json")));
  const Instance in = parse_scene(ReadFile(scene));
  Json& a = collided["robot_a"];
  const double old = a["length"].get<double>();
  const Point mid = in.b0;
  const double len = Distance(in.a0, mid) + Distance(mid, in.a1);
  a["pieces"] = Json::array(
      {{{"type", "segment"}, {"from", {in.a0.x, in.a0.y}}, {"to", {mid.x, mid.y}}},
       {{"type", "segment"}, {"from", {mid.x, mid.y}}, {"to", {in.a1.x, in.a1.y}}}});
  a["length"] = len;
  collided["length"] = collided["length"].get<double>() - old + len;
  for (Json& s : collided["schedule"]) {
    s["a"] = {s["a"][0].get<double>() * len / old, s["a"][1].get<double>() * len / old};
  }
  WriteFile(work / "collided.json", collided.dump());
  const Run collided_run =
      Execute(tool + " validate " + (work / "collided.json").string() + " " + scene.string());
  double reported_sep = 0.0;
  {
    const size_t at = collided_run.output.find("min_separation ");
    if (at != std::string::npos) reported_sep = std::stod(collided_run.output.substr(at + 15));
  }

  WriteFile(work / "asymmetric.json", R"({
  "robot_a": {"type": "polygon", "vertices": [[-1, -1], [2, -1], [1, 1], [-1, 1]]},
  "robot_b": {"type": "disc", "radius": 1},
  "a0": [-4, 0], "a1": [4, 0], "b0": [0, 3], "b1": [0, -3]
})");
  const Run asym = Execute(tool + " plan " + (work / "asymmetric.json").string() + " -o " +
                           (work / "asymmetric.result.json").string());

  WriteFile(work / "overlap.json", R"({
  "robot_a": {"type": "disc", "radius": 1},
  "robot_b": {"type": "disc", "radius": 1},
  "a0": [0, 0], "a1": [4, 0], "b0": [1, 0], "b1": [-4, 0]
})");
  const Run overlap = Execute(tool + " plan " + (work / "overlap.json").string() + " -o " +
                              (work / "overlap.result.json").string());

  const bool pass = overlap.exit_code == 2 && round_trip_failures == 0 && inflated_run.exit_code == 3 &&
                    collided_run.exit_code == 3 && reported_sep < 0.0 &&
                    asym.exit_code == 1;
  Report(10, "CLI round-trip", pass,
         Fmt("plan -> validate exit 0 on %d/50 scenes; inflated length exit %d, "
             "collided trace exit %d (min_separation %.3g), asymmetric polygon exit %d, "
             "overlapping start exit %d",
             50 - round_trip_failures, inflated_run.exit_code, collided_run.exit_code,
             reported_sep, asym.exit_code, overlap.exit_code));
}

}  // namespace
}  // namespace ccsduet

int main(int argc, char** argv) {
  using namespace ccsduet;
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <ccsduet tool> [work dir]\n");
    return 2;
  }
  const std::string tool = argv[1];
  const fs::path work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "ccsduet_acceptance";

  double plan_seconds = 0.0;
  const std::vector<Planned> corpus = Corpus(600, 2026, &plan_seconds);
  Tightness(corpus, plan_seconds);
  HullIdentity(corpus);
  OracleDominance(corpus);
  Pieces(corpus);
  const Deferred contracts = Reparameterizations(corpus);
  StraightCases();
  Invariance(corpus);
  Report(8, "reparameterization contracts", contracts.pass, contracts.detail);
  Kernel();
  CliRoundTrip(tool, work);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
