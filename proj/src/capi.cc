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

#include "ccsduet/ccsduet.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "ccsduet/io.h"
#include "ccsduet/planner.h"
#include "ccsduet/verify.h"

struct ccsduet_scene {
  ccsduet::Instance instance;
};

struct ccsduet_plan {
  ccsduet::Instance instance;
  ccsduet::PlanResult result;
};

namespace {

thread_local std::string last_error;

ccsduet_status fail(ccsduet_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs f, mapping library exceptions to status codes.
template <typename F>
ccsduet_status guarded(F&& f) {
  try {
    return f();
  } catch (const ccsduet::InputError& e) {
    return fail(CCSDUET_MALFORMED, e.what());
  } catch (const ccsduet::NonViableError& e) {
    return fail(CCSDUET_NONVIABLE, e.what());
  } catch (const ccsduet::InvariantError& e) {
    return fail(CCSDUET_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CCSDUET_INVARIANT, "out of memory");
  } catch (const std::exception& e) {
    return fail(CCSDUET_INVARIANT, e.what());
  }
}

std::optional<std::string> read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_text(char* dst, size_t cap, const std::string& s) {
  const size_t n = std::min(cap - 1, s.size());
  std::memcpy(dst, s.data(), n);
  dst[n] = '\0';
}

void fill_report(const ccsduet::CertificateReport& r, ccsduet_report* out) {
  *out = ccsduet_report{};
  out->lower_bound_gap = r.lower_bound_gap;
  out->hull_identity_residual = r.hull_identity_residual;
  out->hull_alt_residual = r.hull_alt_residual;
  out->trace_hull_residual = r.trace_hull_residual;
  out->oracle_gap = r.oracle_gap.value_or(std::numeric_limits<double>::quiet_NaN());
  out->oracle_step = r.oracle_step.value_or(0.0);
  out->min_separation = r.min_separation;
  out->piece_count_a = r.piece_count_a;
  out->piece_count_b = r.piece_count_b;
  out->pass = r.pass ? 1 : 0;
  copy_text(out->hull_identity_match, sizeof(out->hull_identity_match),
            r.hull_identity_match);
}

}  // namespace

extern "C" {

ccsduet_status ccsduet_scene_from_json(const char* text, ccsduet_scene** out) {
  if (!text || !out) return fail(CCSDUET_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ccsduet_scene{ccsduet::parse_scene(text)};
    return CCSDUET_OK;
  });
}

ccsduet_status ccsduet_scene_load(const char* path, ccsduet_scene** out) {
  if (!path || !out) return fail(CCSDUET_ARGUMENT, "null argument");
  *out = nullptr;
  const std::optional<std::string> text = read_file(path);
  if (!text) return fail(CCSDUET_IO, std::string("cannot read ") + path);
  const ccsduet_status s = ccsduet_scene_from_json(text->c_str(), out);
  if (s != CCSDUET_OK) last_error = std::string(path) + ": " + last_error;
  return s;
}

void ccsduet_scene_free(ccsduet_scene* scene) { delete scene; }

double ccsduet_scene_diameter(const ccsduet_scene* scene) {
  if (!scene) return std::numeric_limits<double>::quiet_NaN();
  return ccsduet::scene_diameter(scene->instance);
}

ccsduet_status ccsduet_plan_scene(const ccsduet_scene* scene, ccsduet_plan** out) {
  if (!scene || !out) return fail(CCSDUET_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ccsduet_plan{scene->instance, ccsduet::plan(scene->instance)};
    return CCSDUET_OK;
  });
}

void ccsduet_plan_free(ccsduet_plan* plan) { delete plan; }

double ccsduet_plan_length(const ccsduet_plan* plan) {
  return plan ? plan->result.length() : std::numeric_limits<double>::quiet_NaN();
}

const char* ccsduet_plan_case(const ccsduet_plan* plan) {
  return plan ? ccsduet::to_string(plan->result.label) : "";
}

const char* ccsduet_plan_direction(const ccsduet_plan* plan) {
  return plan ? ccsduet::to_string(plan->result.direction()) : "";
}

ccsduet_status ccsduet_plan_certify(const ccsduet_plan* plan, int samples,
                                    double oracle_step, ccsduet_report* out) {
  if (!plan || !out) return fail(CCSDUET_ARGUMENT, "null argument");
  if (samples < 2) return fail(CCSDUET_ARGUMENT, "samples must be at least 2");
  return guarded([&] {
    ccsduet::CertifyOptions options;
    options.samples = samples;
    if (oracle_step > 0.0) options.oracle_step = oracle_step;
    fill_report(ccsduet::certify(plan->result, plan->instance, options), out);
    return CCSDUET_OK;
  });
}

ccsduet_status ccsduet_plan_to_json(const ccsduet_plan* plan, char** out) {
  if (!plan || !out) return fail(CCSDUET_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const ccsduet::CertificateReport report =
        ccsduet::certify(plan->result, plan->instance, {});
    *out = copy_string(ccsduet::result_to_json(plan->result, plan->instance, report));
    return CCSDUET_OK;
  });
}

ccsduet_status ccsduet_plan_write_svg(const ccsduet_plan* plan, const char* path) {
  if (!plan || !path) return fail(CCSDUET_ARGUMENT, "null argument");
  return guarded([&] {
    std::ofstream f(path, std::ios::binary);
    f << ccsduet::render_svg(plan->instance, plan->result);
    if (!f) return fail(CCSDUET_IO, std::string("cannot write ") + path);
    return CCSDUET_OK;
  });
}

ccsduet_status ccsduet_validate_json(const char* result_text,
                                     const ccsduet_scene* scene, int samples,
                                     ccsduet_report* out) {
  if (!result_text || !scene || !out) return fail(CCSDUET_ARGUMENT, "null argument");
  if (samples < 2) return fail(CCSDUET_ARGUMENT, "samples must be at least 2");
  return guarded([&] {
    ccsduet::check_viable(scene->instance);
    const ccsduet::ResultDocument doc =
        ccsduet::parse_result(result_text, scene->instance);
    const ccsduet::ValidationReport v =
        ccsduet::validate_result(doc, scene->instance, samples);
    fill_report(v.certificate, out);
    out->length_residual = v.length_residual;
    out->continuity_error = v.continuity_error;
    out->schedule_error = v.schedule_error;
    out->pass = v.pass ? 1 : 0;
    copy_text(out->failures, sizeof(out->failures), v.failures);
    if (!v.pass) return fail(CCSDUET_INVARIANT, "validation failed: " + v.failures);
    return CCSDUET_OK;
  });
}

ccsduet_status ccsduet_oracle(const ccsduet_scene* scene, double step,
                              double margin, double* out) {
  if (!scene || !out) return fail(CCSDUET_ARGUMENT, "null argument");
  return guarded([&] {
    ccsduet::OracleOptions options;
    options.step = step > 0.0 ? step : 0.01 * ccsduet::scene_diameter(scene->instance);
    options.margin = margin;
    *out = ccsduet::oracle_grid(scene->instance, options);
    return CCSDUET_OK;
  });
}

void ccsduet_string_free(char* s) { delete[] s; }

const char* ccsduet_last_error(void) { return last_error.c_str(); }

}  // extern "C"
