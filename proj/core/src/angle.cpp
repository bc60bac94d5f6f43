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
#include <numbers>

#include "cmpk/criteria.hpp"
#include "cmpk/errors.hpp"

namespace cmpk {

AngleEstimate angle_at(const GeodesicSpace& space, const GeodesicSegment& toward_q,
                       const GeodesicSegment& toward_r, Curvature k0,
                       const LadderOptions& opts) {
  const Tolerances& tol = space.tolerances();
  if (!space.same_point(toward_q.start(), toward_r.start()))
    throw DomainError("angle_at: segments do not leave the same point");
  if (opts.rungs < 2 || !(opts.ratio > 0 && opts.ratio < 1))
    throw DomainError("angle_at: need at least two rungs and ratio in (0,1)");

  const Point& p = toward_q.start();
  AngleEstimate est;
  est.vertex = p;
  double t = opts.first_fraction * std::min(toward_q.length(), toward_r.length());
  for (int j = 0; j < opts.rungs; ++j, t *= opts.ratio) {
    if (t < 10 * tol.geodesic) throw LadderFailure("angle ladder collapsed below resolution");
    Point a = toward_q.at(t), b = toward_r.at(t);
    SideTriple s{space.distance(p, a), space.distance(p, b), space.distance(a, b)};
    if (s.a < tol.geodesic || s.b < tol.geodesic)
      throw LadderFailure("angle ladder rung has a degenerate side");
    est.scales.push_back(t);
    est.values.push_back(comparison_angle(k0, s, tol));
  }
  for (std::size_t j = 1; j < est.values.size(); ++j) {
    double dv = est.values[j] - est.values[j - 1];
    if (dv < -opts.monotone_tol) est.non_decreasing = false;
    if (dv > opts.monotone_tol) est.non_increasing = false;
  }
  const double last = est.values.back(), prev = est.values[est.values.size() - 2];
  const double r2 = opts.ratio * opts.ratio;
  est.angle = last;
  est.extrapolated = std::clamp((last - r2 * prev) / (1 - r2), 0.0, std::numbers::pi);
  return est;
}

}  // namespace cmpk
