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

// Command-line front end over the C interface.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ccsduet/ccsduet.h"

namespace {

namespace fs = std::filesystem;

int report_error(ccsduet_status s) {
  std::fflush(stdout);
  std::fprintf(stderr, "error: %s\n", ccsduet_last_error());
  return static_cast<int>(s);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_report(const ccsduet_report& r) {
  std::printf("lower_bound_gap %.3e\n", r.lower_bound_gap);
  std::printf("hull_identity_residual %.3e (%s)\n", r.hull_identity_residual,
              r.hull_identity_match);
  std::printf("hull_alt_residual %.3e\n", r.hull_alt_residual);
  std::printf("trace_hull_residual %.3e\n", r.trace_hull_residual);
  if (!std::isnan(r.oracle_gap)) {
    std::printf("oracle_gap %.6g (step %.6g)\n", r.oracle_gap, r.oracle_step);
  }
  std::printf("min_separation %.6g\n", r.min_separation);
  std::printf("pieces %d %d\n", r.piece_count_a, r.piece_count_b);
}

int cmd_plan(const std::string& scene_path, const std::string& out_path,
             const std::string& svg_path) {
  ccsduet_scene* scene = nullptr;
  ccsduet_status s = ccsduet_scene_load(scene_path.c_str(), &scene);
  if (s != CCSDUET_OK) return report_error(s);
  ccsduet_plan* plan = nullptr;
  s = ccsduet_plan_scene(scene, &plan);
  ccsduet_scene_free(scene);
  if (s != CCSDUET_OK) return report_error(s);
  char* json = nullptr;
  s = ccsduet_plan_to_json(plan, &json);
  if (s == CCSDUET_OK) {
    std::ofstream out(out_path, std::ios::binary);
    out << json;
    out.close();
    ccsduet_string_free(json);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
      ccsduet_plan_free(plan);
      return CCSDUET_IO;
    }
  }
  if (s == CCSDUET_OK && !svg_path.empty()) s = ccsduet_plan_write_svg(plan, svg_path.c_str());
  if (s == CCSDUET_OK) {
    std::printf("%s %s length %.17g\n", ccsduet_plan_case(plan),
                ccsduet_plan_direction(plan), ccsduet_plan_length(plan));
  }
  ccsduet_plan_free(plan);
  return s == CCSDUET_OK ? 0 : report_error(s);
}

int cmd_validate(const std::string& result_path, const std::string& scene_path,
                 int samples) {
  const std::optional<std::string> text = read_file(result_path);
  if (!text) {
    std::fprintf(stderr, "error: cannot read %s\n", result_path.c_str());
    return CCSDUET_IO;
  }
  ccsduet_scene* scene = nullptr;
  ccsduet_status s = ccsduet_scene_load(scene_path.c_str(), &scene);
  if (s != CCSDUET_OK) return report_error(s);
  ccsduet_report r{};
  s = ccsduet_validate_json(text->c_str(), scene, samples, &r);
  ccsduet_scene_free(scene);
  // A failed validation still carries a full report.
  if (s == CCSDUET_OK || r.failures[0] != '\0') {
    print_report(r);
    std::printf("length_residual %.3e\n", r.length_residual);
    std::printf("continuity_error %.3e\n", r.continuity_error);
    std::printf("schedule_error %.3e\n", r.schedule_error);
  }
  if (s != CCSDUET_OK) return report_error(s);
  std::printf("pass\n");
  return 0;
}

int cmd_oracle(const std::string& scene_path, double step, double margin) {
  ccsduet_scene* scene = nullptr;
  ccsduet_status s = ccsduet_scene_load(scene_path.c_str(), &scene);
  if (s != CCSDUET_OK) return report_error(s);
  double length = 0.0;
  s = ccsduet_oracle(scene, step, margin, &length);
  ccsduet_scene_free(scene);
  if (s != CCSDUET_OK) return report_error(s);
  std::printf("oracle length %.17g\n", length);
  return 0;
}

struct BatchEntry {
  std::string name;
  ccsduet_status status = CCSDUET_OK;
  std::string error;
  ccsduet_report report{};
  double length = 0.0;
  double seconds = 0.0;
};

BatchEntry run_one(const fs::path& path, double step) {
  BatchEntry e;
  e.name = path.filename().string();
  const auto t0 = std::chrono::steady_clock::now();
  ccsduet_scene* scene = nullptr;
  e.status = ccsduet_scene_load(path.string().c_str(), &scene);
  ccsduet_plan* plan = nullptr;
  if (e.status == CCSDUET_OK) {
    const double h = step > 0.0 ? step : 0.01 * ccsduet_scene_diameter(scene);
    e.status = ccsduet_plan_scene(scene, &plan);
    if (e.status == CCSDUET_OK) {
      e.length = ccsduet_plan_length(plan);
      e.status = ccsduet_plan_certify(plan, 10000, h, &e.report);
    }
    if (e.status == CCSDUET_OK && !e.report.pass) {
      e.status = CCSDUET_INVARIANT;
      e.error = "certificate failed";
    }
  }
  if (e.status != CCSDUET_OK && e.error.empty()) e.error = ccsduet_last_error();
  ccsduet_plan_free(plan);
  ccsduet_scene_free(scene);
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

int cmd_batch(const std::string& dir, double step) {
  std::error_code ec;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  if (ec) {
    std::fprintf(stderr, "error: cannot list %s\n", dir.c_str());
    return CCSDUET_IO;
  }
  std::sort(files.begin(), files.end());

  std::vector<BatchEntry> results(files.size());
  const size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < std::min(workers, files.size()); ++w) {
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < files.size();) results[i] = run_one(files[i], step);
    });
  }
  for (std::thread& t : pool) t.join();

  int failed = 0;
  int worst = 0;
  double max_lb = 0.0, max_hull = 0.0, max_oracle = 0.0, total = 0.0, slowest = 0.0;
  for (const BatchEntry& e : results) {
    total += e.seconds;
    slowest = std::max(slowest, e.seconds);
    if (e.status != CCSDUET_OK) {
      ++failed;
      worst = std::max(worst, static_cast<int>(e.status));
      std::printf("FAIL %s (exit %d): %s\n", e.name.c_str(), e.status, e.error.c_str());
      continue;
    }
    const ccsduet_report& r = e.report;
    max_lb = std::max(max_lb, r.lower_bound_gap);
    max_hull = std::max(max_hull, r.hull_identity_residual);
    max_oracle = std::max(max_oracle, r.oracle_gap);
    std::printf("PASS %s length %.12g lower_bound_gap %.2e hull %.2e oracle_gap %.3g "
                "min_sep %.3g pieces %d/%d %.2fs\n",
                e.name.c_str(), e.length, r.lower_bound_gap, r.hull_identity_residual,
                r.oracle_gap, r.min_separation, r.piece_count_a, r.piece_count_b,
                e.seconds);
  }
  std::printf("scenes %zu passed %zu failed %d max_lower_bound_gap %.2e "
              "max_hull_residual %.2e max_oracle_gap %.3g total %.2fs slowest %.2fs\n",
              results.size(), results.size() - failed, failed, max_lb, max_hull,
              max_oracle, total, slowest);
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-length coordinated motions for two convex centrally symmetric robots"};
  app.require_subcommand(1);

  std::string scene, out, svg, result, dir;
  int samples = 10000;
  double step = 0.0, margin = -1.0;

  CLI::App* plan = app.add_subcommand("plan", "Plan a scene and write the result document");
  plan->add_option("scene", scene, "Scene JSON")->required();
  plan->add_option("-o,--out", out, "Result JSON")->required();
  plan->add_option("--svg", svg, "SVG plot of the plan");

  CLI::App* validate = app.add_subcommand("validate", "Rebuild and certify a result document");
  validate->add_option("result", result, "Result JSON")->required();
  validate->add_option("scene", scene, "Scene JSON")->required();
  validate->add_option("--samples", samples, "Separation samples")->check(CLI::Range(2, 100000000));

  CLI::App* oracle = app.add_subcommand("oracle", "Grid search over intermediate placements");
  oracle->add_option("scene", scene, "Scene JSON")->required();
  oracle->add_option("--step", step, "Grid step (default 1% of the scene diameter)");
  oracle->add_option("--margin", margin, "Grid margin (default twice the sum circumradius)");

  CLI::App* batch = app.add_subcommand("batch", "Plan and certify every scene in a directory");
  batch->add_option("dir", dir, "Directory of scene JSON files")->required();
  batch->add_option("--step", step, "Oracle grid step (default 1% of each scene diameter)");

  CLI11_PARSE(app, argc, argv);
  if (*plan) return cmd_plan(scene, out, svg);
  if (*validate) return cmd_validate(result, scene, samples);
  if (*oracle) return cmd_oracle(scene, step, margin);
  return cmd_batch(dir, step);
}
