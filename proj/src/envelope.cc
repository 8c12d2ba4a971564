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

#include "ccsduet/envelope.h"

#include <algorithm>
#include <cmath>

namespace ccsduet {
namespace {

bool active(const SupportTerm& t, double theta) {
  return interval_contains(t.domain, Angle(theta), 0.0);
}

void add_angle(std::vector<double>& out, double raw) {
  out.push_back(Angle(raw).value());
}

}  // namespace

SupportEnvelope::SupportEnvelope(std::vector<SupportTerm> terms)
    : terms_(std::move(terms)) {
  std::vector<double> cuts = {0.0};
  for (const SupportTerm& t : terms_) {
    if (!t.domain.full) {
      cuts.push_back(t.domain.start.value());
      cuts.push_back(t.domain.end.value());
    }
  }
  for (size_t i = 0; i < terms_.size(); ++i) {
    for (size_t j = i + 1; j < terms_.size(); ++j) {
      const double da = terms_[i].a - terms_[j].a;
      const double db = terms_[i].b - terms_[j].b;
      const double dc = terms_[j].c - terms_[i].c;
      const double r = std::hypot(da, db);
      if (r < 1e-300) continue;
      const double ratio = dc / r;
      if (std::abs(ratio) > 1.0) continue;
      const double phi = std::atan2(db, da);
      const double delta = std::acos(ratio);
      add_angle(cuts, phi + delta);
      add_angle(cuts, phi - delta);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(kTwoPi);

  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k];
    const double hi = cuts[k + 1];
    if (hi <= lo) continue;
    const double mid = 0.5 * (lo + hi);
    int best = -1;
    double best_value = 0.0;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (!active(terms_[i], mid)) continue;
      const double v = terms_[i].eval(mid);
      if (best < 0 || v > best_value) {
        best = static_cast<int>(i);
        best_value = v;
      }
    }
    if (!spans_.empty() && spans_.back().term == best) {
      spans_.back().hi = hi;
    } else {
      spans_.push_back({lo, hi, best});
    }
  }
}

std::optional<double> SupportEnvelope::value(double theta) const {
  std::optional<double> best;
  for (const SupportTerm& t : terms_) {
    if (!active(t, theta)) continue;
    const double v = t.eval(theta);
    if (!best || v > *best) best = v;
  }
  return best;
}

double SupportEnvelope::integral() const {
  double sum = 0.0;
  for (const EnvelopeSpan& s : spans_) {
    if (s.term >= 0) sum += terms_[s.term].integral(s.lo, s.hi);
  }
  return sum;
}

bool SupportEnvelope::has_gaps() const {
  return std::any_of(spans_.begin(), spans_.end(),
                     [](const EnvelopeSpan& s) { return s.term < 0; });
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double tol, int max_depth) {
  if (hi <= lo) return 0.0;
  const double fa = f(lo);
  const double fb = f(hi);
  const double m = 0.5 * (lo + hi);
  const double fm = f(m);
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, lo, hi, fa, fm, fb, whole, tol, max_depth);
}

double integrate_circle(const std::function<double(double)>& f,
                        std::span<const double> breakpoints, double tol) {
  std::vector<double> cuts = {0.0, kTwoPi};
  for (double b : breakpoints) cuts.push_back(Angle(b).value());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const double per = tol / static_cast<double>(cuts.size());
  double sum = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    // Force a few initial subdivisions so narrow features are not skipped.
    const int pieces = 8;
    const double w = (cuts[i + 1] - cuts[i]) / pieces;
    for (int k = 0; k < pieces; ++k) {
      sum += adaptive_simpson(f, cuts[i] + k * w, cuts[i] + (k + 1) * w,
                              per / pieces);
    }
  }
  return sum;
}

}  // namespace ccsduet
