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

// Scene and result documents, result validation, and SVG rendering.

#ifndef CCSDUET_IO_H_
#define CCSDUET_IO_H_

#include <string>
#include <string_view>

#include "ccsduet/motion.h"
#include "ccsduet/planner.h"
#include "ccsduet/verify.h"

namespace ccsduet {

// Parses a scene document. Throws InputError naming the offending field.
// Viability is not checked here.
Instance parse_scene(std::string_view text,
                     const TolerancePolicy& tol = default_tolerance());
std::string scene_to_json(const Instance& inst);

// Result document for a plan of `inst`, embedding `report`.
std::string result_to_json(const PlanResult& plan, const Instance& inst,
                           const CertificateReport& report);

struct ResultDocument {
  double length = 0.0;
  Turn direction = Turn::kCcw;
  CaseLabel label = CaseLabel::kStraight;
  // Co-motion rebuilt from the listed pieces and schedule. Piece lengths are
  // recomputed from the geometry, not copied from the document.
  CoMotion comotion;
};

// Rebuilds a result against the scene it claims to solve. Throws InputError
// when the document is malformed or a walk leaves the sum boundary.
ResultDocument parse_result(std::string_view text, const Instance& inst,
                            const TolerancePolicy& tol = default_tolerance());

struct ValidationReport {
  CertificateReport certificate;
  // |reported length - recomputed piece lengths|
  double length_residual = 0.0;
  // Largest distance between consecutive piece endpoints, or between the
  // paths and the scene endpoints.
  double continuity_error = 0.0;
  // Largest mismatch of the schedule against [0, 1] and the path lengths.
  double schedule_error = 0.0;
  bool pass = false;
  // Failed checks, comma separated; empty on success.
  std::string failures;
};

ValidationReport validate_result(const ResultDocument& doc, const Instance& inst,
                                 int samples,
                                 const TolerancePolicy& tol = default_tolerance());

// Start placements in green, goal placements in red, traces in blue, and the
// forbidden regions of the resting robots as dashed outlines.
std::string render_svg(const Instance& inst, const PlanResult& plan);

}  // namespace ccsduet

#endif  // CCSDUET_IO_H_
