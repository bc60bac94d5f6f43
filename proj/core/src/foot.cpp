// Copyright 2026 The cmpk Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cmpk/criteria.hpp"
#include "cmpk/errors.hpp"
#include "search.hpp"

namespace cmpk {

namespace {

// Golden section stalls at sqrt(machine eps) relative accuracy because the
// distance is flat at a smooth minimum. The symmetric difference
// f(t+h) - f(t-h) is not flat there, so a bisection on its sign pins t down
// to roundoff. Kinked minima (tree branch points) fail the acceptance check
// and keep the golden-section answer.
double polish(const std::function<double(const Point&)>& f, const GeodesicSegment& seg,
              double t, double ft, double bracket) {
  const double L = seg.length();
  const double h = 1e-4 * L;
  double lo = t - bracket, hi = t + bracket;
  if (lo - h < 0 || hi + h > L) return t;
  auto g = [&](double s) { return f(seg.at(s + h)) - f(seg.at(s - h)); };
  double glo = g(lo), ghi = g(hi);
  if (!(glo < 0 && ghi > 0)) return t;
  for (int i = 0; i < 80 && hi - lo > 1e-15 * L; ++i) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if (gm == 0) {
      lo = hi = mid;
      break;
    }
    (gm < 0 ? lo : hi) = mid;
  }
  double s = 0.5 * (lo + hi);
  double fs = f(seg.at(s));
  return fs <= ft + 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, ft) ? s : t;
}

}  // namespace

FootResult foot_of_perpendicular(const GeodesicSpace& space, const Point& q,
                                 const GeodesicSegment& seg, const FootOptions& opts) {
  const Tolerances& tol = space.tolerances();
  const double L = seg.length();
  if (!(L > tol.geodesic)) throw DegenerateError("segment has zero length");
  const int n = std::max(opts.grid, 2);
  auto f = space.distance_from(q);

  std::vector<double> ts(n + 1), fs(n + 1);
  int best = 0;
  for (int i = 0; i <= n; ++i) {
    ts[i] = L * i / n;
    fs[i] = f(seg.at(ts[i]));
    if (fs[i] < fs[best]) best = i;
  }

  double lo = ts[std::max(best - 1, 0)];
  double hi = ts[std::min(best + 1, n)];
  auto ff = [&](double t) { return f(seg.at(t)); };
  auto [t, d] = detail::golden_section(ff, lo, hi, opts.rel_tol * L);
  if (fs[best] < d) {
    t = ts[best];
    d = fs[best];
  }
  double tp = polish(f, seg, t, d, std::max(2 * opts.rel_tol, 1e-5) * L);
  if (tp != t) {
    t = tp;
    d = ff(t);
  }
  if (d <= tol.geodesic) throw DegenerateError("point lies on the segment");

  FootResult out;
  out.t = t;
  out.distance = d;
  out.foot = seg.at(t);
  const double margin = opts.margin * L;
  out.interior = t >= margin && t <= L - margin;
  const double step = L / n;
  for (int i = 0; i <= n; ++i)
    if (fs[i] <= d + tol.tie && std::abs(ts[i] - t) > step) out.ties.push_back(ts[i]);
  if (opts.require_interior && !out.interior) throw FootOnBoundary(t, L);
  return out;
}

}  // namespace cmpk
