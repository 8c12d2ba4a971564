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

#include <random>

#include "doctest.h"

namespace ccsduet {
namespace {

TEST_CASE("adaptive_simpson integrates smooth functions") {
  const double v = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-10));
  const std::vector<double> none;
  CHECK(integrate_circle([](double) { return 1.0; }, none, 1e-12) ==
        doctest::Approx(kTwoPi));
}

TEST_CASE("exact envelope integral matches quadrature of the pointwise max") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::uniform_real_distribution<double> rad(0.0, 1.5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SupportTerm> terms;
    const int points = 2 + trial % 5;
    for (int i = 0; i < points; ++i) terms.push_back(SupportTerm::FromPoint({u(rng), u(rng)}));
    std::vector<double> breaks;
    for (int i = 0; i < trial % 4; ++i) {
      const AngularInterval dom{Angle(ang(rng)), Angle(ang(rng)), false};
      terms.push_back(SupportTerm::FromArc({u(rng), u(rng)}, rad(rng), dom));
      breaks.push_back(dom.start.value());
      breaks.push_back(dom.end.value());
    }
    const SupportEnvelope env(terms);
    CHECK_FALSE(env.has_gaps());
    // Independent route: brute max over terms, sampled by adaptive Simpson.
    auto brute = [&](double t) {
      double best = -1e300;
      for (const SupportTerm& s : terms) {
        if (interval_contains(s.domain, Angle(t), 0.0)) best = std::max(best, s.eval(t));
      }
      return best;
    };
    const double quad = integrate_circle(brute, breaks, 1e-10);
    CHECK(env.integral() == doctest::Approx(quad).epsilon(1e-7));
    for (int k = 0; k < 50; ++k) {
      const double t = ang(rng);
      CHECK(*env.value(t) == doctest::Approx(brute(t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("envelope of a point set integrates to its hull perimeter") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Point> pts;
    std::vector<SupportTerm> terms;
    for (int i = 0; i < 12; ++i) {
      pts.push_back({u(rng), u(rng)});
      terms.push_back(SupportTerm::FromPoint(pts.back()));
    }
    const auto hull = convex_hull(pts);
    double per = 0.0;
    for (size_t i = 0; i < hull.size(); ++i) per += Distance(hull[i], hull[(i + 1) % hull.size()]);
    CHECK(SupportEnvelope(terms).integral() == doctest::Approx(per).epsilon(1e-12));
  }
}

TEST_CASE("restricted terms leave gaps") {
  const SupportEnvelope env({SupportTerm::FromArc({0, 0}, 1.0, {Angle(0.0), Angle(1.0), false})});
  CHECK(env.has_gaps());
  CHECK(env.integral() == doctest::Approx(1.0));
  CHECK_FALSE(env.value(2.0).has_value());
}

}  // namespace
}  // namespace ccsduet
