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

#include "ccsduet/motion.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ccsduet {
namespace {

double lerp(double a, double b, double lam) { return a + lam * (b - a); }

double fraction(const ScheduleSegment& seg, double t) {
  if (seg.t1 <= seg.t0) return 0.0;
  return std::clamp((t - seg.t0) / (seg.t1 - seg.t0), 0.0, 1.0);
}

// Index of the straight piece holding arc positions [lo, hi], or -1.
int straight_piece(const PointPath& path, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  const double slack = 1e-9 * std::max(1.0, path.length);
  double start = 0.0;
  for (size_t i = 0; i < path.pieces.size(); ++i) {
    const PathPiece& p = path.pieces[i];
    const double end = start + p.length;
    if (p.kind == PathPiece::Kind::kSegment && lo >= start - slack &&
        hi <= end + slack) {
      return static_cast<int>(i);
    }
    start = end;
  }
  return -1;
}

bool rides_straight(const PointPath& path, double lo, double hi) {
  if (std::abs(hi - lo) <= 1e-12 * std::max(1.0, path.length)) return true;
  return straight_piece(path, lo, hi) >= 0;
}

// Unit direction of travel on the straight stretch [lo, hi] of a path.
Point travel_direction(const PointPath& path, double lo, double hi) {
  if (hi - lo <= 0.0) return {0.0, 0.0};
  return (1.0 / (hi - lo)) * (path.point_at(hi) - path.point_at(lo));
}

// Offsets (x, y) along the travel directions of A and B that put A - B at
// the sliding target for fraction lam.
bool sliding_offsets(const CoMotion& m, const ScheduleSegment& seg, double lam,
                     double* x, double* y) {
  const Point as = m.path_a.point_at(seg.a0);
  const Point bs = m.path_b.point_at(seg.b0);
  const Point ua = travel_direction(m.path_a, seg.a0, seg.a1);
  const Point ub = travel_direction(m.path_b, seg.b0, seg.b1);
  const Point target = m.sum->point_at(lerp(seg.s0, seg.s1, lam)) +
                       (1.0 - lam) * seg.c0 + lam * seg.c1;
  const Point rhs = target - (as - bs);
  const double det = -Cross(ua, ub);
  if (std::abs(det) <= 1e-12) return false;
  *x = Cross(rhs, -1.0 * ub) / det;
  *y = Cross(ua, rhs) / det;
  return true;
}

// Part of seg over [t0, t1], a sub-range of its own span.
ScheduleSegment cut(const CoMotion& m, const ScheduleSegment& seg, double t0,
                    double t1) {
  ScheduleSegment out = seg;
  const double l0 = fraction(seg, t0);
  const double l1 = fraction(seg, t1);
  out.t0 = t0;
  out.t1 = t1;
  if (seg.kind == ScheduleSegment::Kind::kLinear) {
    out.a0 = lerp(seg.a0, seg.a1, l0);
    out.a1 = lerp(seg.a0, seg.a1, l1);
    out.b0 = lerp(seg.b0, seg.b1, l0);
    out.b1 = lerp(seg.b0, seg.b1, l1);
    return out;
  }
  const auto [a0, b0] = m.arc_positions(t0);
  const auto [a1, b1] = m.arc_positions(t1);
  out.a0 = a0;
  out.a1 = a1;
  out.b0 = b0;
  out.b1 = b1;
  out.s0 = lerp(seg.s0, seg.s1, l0);
  out.s1 = lerp(seg.s0, seg.s1, l1);
  out.c0 = (1.0 - l0) * seg.c0 + l0 * seg.c1;
  out.c1 = (1.0 - l1) * seg.c0 + l1 * seg.c1;
  return out;
}

// Replaces the schedule over [t0, t1] with inserted.
CoMotion splice(const CoMotion& m, double t0, double t1,
                const ScheduleSegment& inserted) {
  CoMotion out = m;
  out.schedule.clear();
  for (const ScheduleSegment& seg : m.schedule) {
    if (seg.t1 <= t0 || seg.t0 >= t1) {
      if (seg.t0 >= t1 && out.schedule.back().t1 < t1) {
        out.schedule.push_back(inserted);
      }
      out.schedule.push_back(seg);
      continue;
    }
    if (seg.t0 < t0) out.schedule.push_back(cut(m, seg, seg.t0, t0));
    if (out.schedule.empty() || out.schedule.back().t1 < t1) {
      out.schedule.push_back(inserted);
    }
    if (seg.t1 > t1) out.schedule.push_back(cut(m, seg, t1, seg.t1));
  }
  if (out.schedule.empty() || out.schedule.back().t1 < t1) {
    out.schedule.push_back(inserted);
  }
  return out;
}

// Times at which either path switches pieces or the schedule switches
// segments.
std::vector<double> breakpoints(const CoMotion& m) {
  std::vector<double> out = m.phase_marks;
  out.push_back(0.0);
  out.push_back(1.0);
  auto add_path = [&](const PointPath& path, bool is_a) {
    double s = 0.0;
    for (const PathPiece& p : path.pieces) {
      s += p.length;
      for (const ScheduleSegment& seg : m.schedule) {
        if (seg.kind != ScheduleSegment::Kind::kLinear) continue;
        const double lo = is_a ? seg.a0 : seg.b0;
        const double hi = is_a ? seg.a1 : seg.b1;
        if (hi > lo && s >= lo && s <= hi) {
          out.push_back(lerp(seg.t0, seg.t1, (s - lo) / (hi - lo)));
        }
      }
    }
  };
  add_path(m.path_a, true);
  add_path(m.path_b, false);
  for (const ScheduleSegment& seg : m.schedule) out.push_back(seg.t0);
  std::sort(out.begin(), out.end());
  return out;
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Orientation at t as an interval in the frame of sign (+1 ccw, -1 cw),
// unwrapped the angle near.
bool oriented_interval(const CoMotion& m, double t, double sign, double near,
                       Interval* out) {
  OrientationResult r;
  try {
    const auto [a, b] = evaluate(m, t);
    r = m.sum->orientation_at(a - b);
  } catch (const NonViableError&) {
    return false;
  }
  const double w = r.interval.full ? kTwoPi : r.interval.width();
  double lo = sign > 0.0 ? r.interval.start.value()
                         : -(r.interval.start.value() + w);
  const double mid = lo + 0.5 * w;
  lo += kTwoPi * std::round((near - mid) / kTwoPi);
  out->lo = lo;
  out->hi = lo + w;
  return true;
}

double mid(const Interval& i) { return 0.5 * (i.lo + i.hi); }

// Removes orientation dips that open after a peak and later close, scanning
// forward in time.
CoMotion fix_forward(const CoMotion& m, Turn direction) {
  constexpr int kSamples = 4000;
  constexpr double kDip = 1e-7;
  const double sign = direction == Turn::kCcw ? 1.0 : -1.0;
  CoMotion cur = m;
  std::vector<double> ts(kSamples + 1);
  std::vector<Interval> iv(kSamples + 1);
  std::vector<bool> ok(kSamples + 1);
  double near = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    ts[i] = static_cast<double>(i) / kSamples;
    ok[i] = oriented_interval(m, ts[i], sign, near, &iv[i]);
    if (ok[i]) near = mid(iv[i]);
  }
  const std::vector<double> breaks = breakpoints(m);
  int peak = -1;
  double peak_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSamples; ++i) {
    if (!ok[i]) continue;
    if (peak < 0 || iv[i].lo >= peak_value) {
      peak = i;
      peak_value = iv[i].lo;
      continue;
    }
    if (iv[i].hi >= peak_value - kDip) continue;
    // A dip opens after the peak; find where it closes.
    int close = -1;
    for (int j = i + 1; j <= kSamples; ++j) {
      if (ok[j] && iv[j].hi >= peak_value) {
        close = j;
        break;
      }
    }
    if (close < 0) break;
    // Peak time: the best breakpoint near the sampled peak.
    double ta = ts[peak];
    Interval at = iv[peak];
    const double lo_t = ts[std::max(0, peak - 1)];
    const double hi_t = ts[std::min(kSamples, peak + 1)];
    for (double b : breaks) {
      if (b < lo_t || b > hi_t) continue;
      Interval bi;
      if (oriented_interval(m, b, sign, mid(at), &bi) &&
          mid(bi) >= mid(at) - 1e-12) {
        ta = b;
        at = bi;
      }
    }
    const double target = mid(at);
    // Root of the representative orientation returning to the peak value.
    double lo = ts[close - 1];
    double hi = ts[close];
    for (int k = 0; k < 100 && hi - lo > 1e-15; ++k) {
      const double t = 0.5 * (lo + hi);
      Interval ti;
      if (oriented_interval(m, t, sign, target, &ti) && mid(ti) >= target) {
        hi = t;
      } else {
        lo = t;
      }
    }
    const double tb = hi;
    const auto [aa, ba] = m.arc_positions(ta);
    const auto [ab, bb] = m.arc_positions(tb);
    if (tb > ta && rides_straight(m.path_a, aa, ab) &&
        rides_straight(m.path_b, ba, bb)) {
      ScheduleSegment seg;
      seg.t0 = ta;
      seg.t1 = tb;
      seg.a0 = aa;
      seg.a1 = ab;
      seg.b0 = ba;
      seg.b1 = bb;
      cur = splice(cur, ta, tb, seg);
    }
    i = close;
    peak = close;
    peak_value = std::max(peak_value, iv[close].lo);
  }
  return cur;
}

double separation_at(const CoMotion& m, double t) {
  const auto [a, b] = evaluate(m, t);
  return m.sum->signed_distance(a - b);
}

}  // namespace

CoMotion CoMotion::Decoupled(PointPath path_a, PointPath path_b,
                             const std::vector<Phase>& phases,
                             std::shared_ptr<const SumBoundary> sum) {
  CoMotion m;
  m.path_a = std::move(path_a);
  m.path_b = std::move(path_b);
  m.sum = std::move(sum);
  double total = 0.0;
  for (const Phase& p : phases) total += p.amount;
  double t = 0.0;
  double a = 0.0;
  double b = 0.0;
  for (size_t k = 0; k < phases.size(); ++k) {
    const Phase& p = phases[k];
    const double dt = total > 0.0 ? p.amount / total : 0.0;
    if (dt > 0.0) {
      ScheduleSegment seg;
      seg.t0 = t;
      seg.t1 = k + 1 == phases.size() ? 1.0 : std::min(1.0, t + dt);
      seg.a0 = a;
      seg.b0 = b;
      if (p.moves_a) a += p.amount; else b += p.amount;
      seg.a1 = a;
      seg.b1 = b;
      m.schedule.push_back(seg);
      t = seg.t1;
    }
    if (k + 1 < phases.size()) m.phase_marks.push_back(t);
  }
  if (m.schedule.empty()) {
    ScheduleSegment seg;
    seg.t1 = 1.0;
    m.schedule.push_back(seg);
  }
  m.schedule.back().t1 = 1.0;
  return m;
}

std::pair<double, double> CoMotion::arc_positions(double t) const {
  auto it = std::upper_bound(
      schedule.begin(), schedule.end(), t,
      [](double v, const ScheduleSegment& s) { return v < s.t0; });
  const ScheduleSegment& seg =
      it == schedule.begin() ? schedule.front() : *std::prev(it);
  const double lam = fraction(seg, t);
  if (seg.kind == ScheduleSegment::Kind::kLinear) {
    return {lerp(seg.a0, seg.a1, lam), lerp(seg.b0, seg.b1, lam)};
  }
  double x = 0.0;
  double y = 0.0;
  if (!sliding_offsets(*this, seg, lam, &x, &y)) {
    throw InvariantError("degenerate sliding segment");
  }
  return {seg.a0 + x, seg.b0 + y};
}

CoMotion CoMotion::transformed(const RigidTransform& t) const {
  CoMotion out = *this;
  out.path_a = path_a.transformed(t);
  out.path_b = path_b.transformed(t);
  RigidTransform linear = t;
  linear.translation = {0.0, 0.0};
  out.sum = std::make_shared<const SumBoundary>(sum->transformed(linear));
  for (ScheduleSegment& seg : out.schedule) {
    if (seg.kind != ScheduleSegment::Kind::kSliding) continue;
    const double ds = seg.s1 - seg.s0;
    seg.s0 = out.sum->locate(linear.apply_linear(sum->point_at(seg.s0)));
    seg.s1 = seg.s0 + (t.flipped ? -ds : ds);
    seg.c0 = linear.apply_linear(seg.c0);
    seg.c1 = linear.apply_linear(seg.c1);
  }
  return out;
}

CoMotion CoMotion::reversed() const {
  CoMotion out = *this;
  out.path_a = path_a.reversed();
  out.path_b = path_b.reversed();
  out.schedule.clear();
  const double la = path_a.length;
  const double lb = path_b.length;
  for (auto it = schedule.rbegin(); it != schedule.rend(); ++it) {
    ScheduleSegment seg = *it;
    seg.t0 = 1.0 - it->t1;
    seg.t1 = 1.0 - it->t0;
    seg.a0 = la - it->a1;
    seg.a1 = la - it->a0;
    seg.b0 = lb - it->b1;
    seg.b1 = lb - it->b0;
    std::swap(seg.s0, seg.s1);
    std::swap(seg.c0, seg.c1);
    out.schedule.push_back(seg);
  }
  out.schedule.front().t0 = 0.0;
  out.schedule.back().t1 = 1.0;
  out.phase_marks.clear();
  for (auto it = phase_marks.rbegin(); it != phase_marks.rend(); ++it) {
    out.phase_marks.push_back(1.0 - *it);
  }
  return out;
}

CoMotion CoMotion::swapped() const {
  CoMotion out = *this;
  std::swap(out.path_a, out.path_b);
  for (ScheduleSegment& seg : out.schedule) {
    std::swap(seg.a0, seg.b0);
    std::swap(seg.a1, seg.b1);
    if (seg.kind != ScheduleSegment::Kind::kSliding) continue;
    // B - A is the point reflection of A - B, which keeps orientation.
    const double ds = seg.s1 - seg.s0;
    seg.s0 = sum->locate(-1.0 * sum->point_at(seg.s0));
    seg.s1 = seg.s0 + ds;
    seg.c0 = -1.0 * seg.c0;
    seg.c1 = -1.0 * seg.c1;
  }
  return out;
}

std::pair<Point, Point> evaluate(const CoMotion& m, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("time outside [0, 1]");
  const auto [a, b] = m.arc_positions(t);
  return {m.path_a.point_at(a), m.path_b.point_at(b)};
}

double min_separation(const CoMotion& m, int n_samples) {
  const int n = std::max(2, n_samples);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    best = std::min(best, separation_at(m, static_cast<double>(i) / (n - 1)));
  }
  return best;
}

std::vector<double> OrientationProfile::unwrapped() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const OrientationSample& s : samples) {
    double v = s.orientation.value().value();
    if (!out.empty()) v += kTwoPi * std::round((out.back() - v) / kTwoPi);
    out.push_back(v);
  }
  return out;
}

OrientationProfile orientation_profile(const CoMotion& m, int n_samples) {
  OrientationProfile profile;
  const int n = std::max(2, n_samples);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    const auto [a, b] = evaluate(m, t);
    try {
      profile.samples.push_back({t, m.sum->orientation_at(a - b)});
    } catch (const NonViableError&) {
    }
  }
  return profile;
}

bool is_orientation_monotone(const CoMotion& m, Turn direction, int n_samples,
                             double eps_angle) {
  const double sign = direction == Turn::kCcw ? 1.0 : -1.0;
  const int n = std::max(2, n_samples);
  // Greedy choice of the smallest admissible angle in each interval.
  bool started = false;
  double v = 0.0;
  for (int i = 0; i < n; ++i) {
    Interval iv;
    if (!oriented_interval(m, static_cast<double>(i) / (n - 1), sign, v, &iv)) {
      continue;
    }
    if (!started) {
      v = iv.lo;
      started = true;
      continue;
    }
    if (iv.hi < v - eps_angle) return false;
    v = std::max(v, iv.lo);
  }
  return true;
}

CoMotion make_orientation_monotone(const CoMotion& m, Turn direction) {
  if (is_orientation_monotone(m, direction, 10000)) return m;
  // Dips that never close before the end are start dips of the reversal.
  const CoMotion forward = fix_forward(m, direction);
  return fix_forward(forward.reversed(), opposite(direction)).reversed();
}

std::vector<std::pair<double, double>> contact_intervals(const CoMotion& m,
                                                         int n_samples,
                                                         double threshold) {
  std::vector<std::pair<double, double>> out;
  const int n = std::max(2, n_samples);
  bool open = false;
  double begin = 0.0;
  double last = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    const bool touching = separation_at(m, t) <= threshold;
    if (touching && !open) {
      open = true;
      begin = t;
    }
    if (!touching && open) {
      open = false;
      out.push_back({begin, last});
    }
    last = t;
  }
  if (open) out.push_back({begin, last});
  return out;
}

CoMotion make_contact_preserving(const CoMotion& m, Turn direction) {
  constexpr int kSamples = 4000;
  const auto contacts = contact_intervals(m, kSamples + 1);
  if (contacts.size() < 2) return m;
  const double scale = std::max(1.0, m.sum->perimeter());
  const double touch = 1e-12 * scale;
  const double step = 1.0 / kSamples;
  CoMotion cur = m;
  for (size_t k = 0; k + 1 < contacts.size(); ++k) {
    // Exact ends of the gap by bisection on the separation.
    double lo = contacts[k].second;
    double hi = std::min(1.0, lo + step);
    for (int it = 0; it < 100; ++it) {
      const double t = 0.5 * (lo + hi);
      (separation_at(m, t) <= touch ? lo : hi) = t;
    }
    const double te = lo;
    hi = contacts[k + 1].first;
    lo = std::max(0.0, hi - step);
    for (int it = 0; it < 100; ++it) {
      const double t = 0.5 * (lo + hi);
      (separation_at(m, t) <= touch ? hi : lo) = t;
    }
    const double ts = hi;
    if (ts <= te) continue;
    const auto [ae, be] = m.arc_positions(te);
    const auto [as, bs] = m.arc_positions(ts);
    if (straight_piece(m.path_a, ae, as) < 0 ||
        straight_piece(m.path_b, be, bs) < 0 || as <= ae || bs <= be) {
      continue;
    }
    ScheduleSegment seg;
    seg.kind = ScheduleSegment::Kind::kSliding;
    seg.t0 = te;
    seg.t1 = ts;
    seg.a0 = ae;
    seg.a1 = as;
    seg.b0 = be;
    seg.b1 = bs;
    const Point de = m.path_a.point_at(ae) - m.path_b.point_at(be);
    const Point ds = m.path_a.point_at(as) - m.path_b.point_at(bs);
    const double per = m.sum->perimeter();
    seg.s0 = m.sum->locate(de);
    double s1 = m.sum->locate(ds);
    double walk = direction == Turn::kCcw ? s1 - seg.s0 : seg.s0 - s1;
    walk = std::fmod(walk, per);
    if (walk < 0.0) walk += per;
    seg.s1 = direction == Turn::kCcw ? seg.s0 + walk : seg.s0 - walk;
    seg.c0 = de - m.sum->point_at(seg.s0);
    seg.c1 = ds - m.sum->point_at(seg.s1);
    // Both robots must advance monotonically and stay on their pieces.
    const double slack = 1e-9 * scale;
    bool valid = true;
    double px = -slack;
    double py = -slack;
    for (int i = 0; i <= 256 && valid; ++i) {
      double x = 0.0;
      double y = 0.0;
      if (!sliding_offsets(m, seg, i / 256.0, &x, &y)) {
        valid = false;
        break;
      }
      valid = x >= px - slack && y >= py - slack &&
              x <= as - ae + slack && y <= bs - be + slack;
      px = x;
      py = y;
    }
    if (!valid) continue;
    cur = splice(cur, te, ts, seg);
  }
  return cur;
}

}  // namespace ccsduet
