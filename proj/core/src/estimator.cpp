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
#include <numbers>

#include "cmpk/errors.hpp"
#include "cmpk/estimator.hpp"

namespace cmpk {

namespace {

constexpr std::uint64_t kSharedStream = 0x5a3d;
constexpr std::uint64_t kRightStream = 0x91ab;

bool has(const std::vector<CriterionId>& v, CriterionId id) {
  return std::find(v.begin(), v.end(), id) != v.end();
}

void draw_shared(const GeodesicSpace& space, const Region& region, SampleSet& set, Rng& rng,
                 const SamplingOptions& opts) {
  const auto& c = set.criteria;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Point r1 = space.sample_ball(region.center, region.radius, rng);
    Point r2 = space.sample_ball(region.center, region.radius, rng);
    Point q = space.sample_ball(region.center, region.radius, rng);
    if (space.same_point(r1, r2)) {
      ++set.rejected;
      continue;
    }
    try {
      auto seg = space.minimal_geodesics(r1, r2).front();
      auto pm = measure_pythagorean(space, q, seg, opts.criteria);
      if (pm.d_qp < opts.min_offset * pm.scale) {
        ++set.rejected;
        continue;
      }
      std::optional<TriangleMeasurement> tm;
      if (has(c, CriterionId::kTriangle))
        tm = measure_triangle(space, q, r1, r2, Curvature(0), opts.criteria);
      if (has(c, CriterionId::kPythagorean)) set.pythagorean.push_back(std::move(pm));
      if (has(c, CriterionId::kPointSegment))
        set.point_segment.push_back(measure_point_segment(space, q, seg, opts.criteria));
      if (tm) set.triangle.push_back(std::move(*tm));
      return;
    } catch (const FootOnBoundary&) {
      ++set.rejected;
    } catch (const DegenerateError&) {
      ++set.rejected;
    } catch (const LadderFailure&) {
      ++set.rejected;
    }
  }
  throw EstimationError("no valid configuration in the region after " +
                        std::to_string(opts.max_attempts) + " draws");
}

void draw_right_angle(const GeodesicSpace& space, const Region& region, SampleSet& set, Rng& rng,
                      const SamplingOptions& opts) {
  std::uniform_real_distribution<double> u(0, 1);
  Point p = space.sample_ball(region.center, region.radius / 2, rng);
  double heading = 2 * std::numbers::pi * u(rng);
  double leg1 = (0.25 + 0.75 * u(rng)) * region.radius / 2;
  double leg2 = (0.25 + 0.75 * u(rng)) * region.radius / 2;
  try {
    set.right_angle.push_back(construct_right_angle(space, p, heading,
                                                    heading + std::numbers::pi / 2, leg1, leg2,
                                                    opts.criteria));
  } catch (const RightAngleUnavailable&) {
    ++set.skipped;
  }
}

}  // namespace

SampleSet draw_samples(const GeodesicSpace& space, const Region& region,
                       const std::vector<CriterionId>& criteria, int n_samples,
                       std::uint64_t seed, const SamplingOptions& opts) {
  if (n_samples < 1) throw EstimationError("need at least one sample");
  if (!(region.radius > 0)) throw EstimationError("region radius must be positive");
  if (criteria.empty()) throw EstimationError("empty criterion set");
  for (auto id : criteria)
    if (id != CriterionId::kPythagorean && id != CriterionId::kPointSegment &&
        id != CriterionId::kTriangle && id != CriterionId::kRightAngle)
      throw EstimationError("criterion '" + std::string(to_string(id)) +
                            "' does not bound curvature");
  SampleSet set;
  set.criteria = criteria;
  bool shared = has(criteria, CriterionId::kPythagorean) ||
                has(criteria, CriterionId::kPointSegment) || has(criteria, CriterionId::kTriangle);
  for (int i = 0; i < n_samples; ++i) {
    if (shared) {
      Rng rng = make_rng(seed, kSharedStream, static_cast<std::uint64_t>(i));
      draw_shared(space, region, set, rng, opts);
    }
    if (has(criteria, CriterionId::kRightAngle)) {
      Rng rng = make_rng(seed, kRightStream, static_cast<std::uint64_t>(i));
      draw_right_angle(space, region, set, rng, opts);
    }
  }
  return set;
}

std::vector<TestOutcome> outcomes_at(const GeodesicSpace& space, const SampleSet& set,
                                     Curvature k, const CriteriaOptions& opts) {
  std::vector<TestOutcome> out;
  for (auto& m : set.pythagorean) out.push_back(evaluate_pythagorean(space, m, k, opts));
  for (auto& m : set.point_segment) out.push_back(evaluate_point_segment(space, m, k, opts));
  for (auto& m : set.triangle) out.push_back(evaluate_triangle(space, m, k, opts));
  for (auto& m : set.right_angle) out.push_back(evaluate_right_angle(space, m, k, opts));
  return out;
}

SweepResult evaluate_samples(const GeodesicSpace& space, const SampleSet& set, Curvature k,
                             const CriteriaOptions& opts) {
  SweepResult r;
  r.k = k.value();
  r.cbb_margin = r.cba_margin = std::numeric_limits<double>::infinity();
  for (auto& o : outcomes_at(space, set, k, opts)) {
    double mb = o.cbb_margin(), ma = o.cba_margin();
    r.cbb_margin = std::min(r.cbb_margin, mb);
    r.cba_margin = std::min(r.cba_margin, ma);
    if (mb < 0) ++r.cbb_failures;
    if (ma < 0) ++r.cba_failures;
  }
  r.cbb = r.cbb_failures == 0;
  r.cba = r.cba_failures == 0;
  return r;
}

namespace {

// Bisection for the switch point of a monotone predicate: CBB holds below
// its switch, CBA above.
BoundResult search(const std::function<SweepResult(double)>& sweep, bool cbb, double lo, double hi,
                   const EstimateOptions& opts) {
  BoundResult b;
  auto pass = [&](double k) {
    ++b.evaluations;
    auto r = sweep(k);
    return cbb ? r.cbb : r.cba;
  };
  // Invariant once formed: cbb ? pass(lo) && !pass(hi) : !pass(lo) && pass(hi).
  const double limit = opts.expand_limit;
  double width = std::max(1.0, hi - lo);
  while (pass(lo) != cbb) {
    hi = lo;
    lo -= width;
    width *= 2;
    if (lo < -limit) {
      b.note = cbb ? "CBB fails at every k down to -" : "CBA holds at every k down to -";
      b.note += std::to_string(static_cast<int>(limit));
      return b;
    }
  }
  width = std::max(1.0, hi - lo);
  while (pass(hi) == cbb) {
    lo = hi;
    hi += width;
    width *= 2;
    if (hi > limit) {
      b.note = cbb ? "CBB holds at every k up to " : "CBA fails at every k up to ";
      b.note += std::to_string(static_cast<int>(limit));
      return b;
    }
  }
  while (hi - lo > opts.resolution) {
    double mid = 0.5 * (lo + hi);
    (pass(mid) == cbb ? lo : hi) = mid;
  }
  double value = cbb ? lo : hi;
  auto r = sweep(value);
  b.value = value;
  b.residual = cbb ? r.cbb_margin : r.cba_margin;
  b.passing = value;
  b.failing = cbb ? hi : lo;
  return b;
}

}  // namespace

CurvatureEstimate estimate_bounds(const GeodesicSpace& space, const Region& region,
                                  const SampleSet& set, const EstimateOptions& opts) {
  if (!(opts.resolution > 0)) throw EstimationError("resolution must be positive");
  if (!(opts.k_lo < opts.k_hi)) throw EstimationError("k bracket must satisfy k_lo < k_hi");
  if (set.pythagorean.empty() && set.point_segment.empty() && set.triangle.empty() &&
      set.right_angle.empty())
    throw EstimationError("no valid configuration in the region");
  CurvatureEstimate est;
  est.space_id = space.id();
  est.region = region;
  est.criteria = opts.criteria;
  est.n_samples = opts.n_samples;
  est.seed = opts.seed;
  est.resolution = opts.resolution;
  est.rejected = set.rejected;
  est.skipped = set.skipped;
  auto sweep = [&](double k) {
    return evaluate_samples(space, set, Curvature(k), opts.sampling.criteria);
  };
  est.cbb = search(sweep, true, opts.k_lo, opts.k_hi, opts);
  est.cba = search(sweep, false, opts.k_lo, opts.k_hi, opts);
  return est;
}

CurvatureEstimate estimate_bounds(const GeodesicSpace& space, const Region& region,
                                  const EstimateOptions& opts) {
  auto set = draw_samples(space, region, opts.criteria, opts.n_samples, opts.seed, opts.sampling);
  return estimate_bounds(space, region, set, opts);
}

double plane_noise_floor(const std::vector<double>& eps_ladder, int n_per_eps,
                         std::uint64_t seed, const ProfileOptions& opts) {
  auto plane = make_euclidean_plane();
  auto prof = right_angle_defect_profile(*plane, plane->default_center(), eps_ladder, n_per_eps,
                                       seed, opts);
  double floor = 0;
  for (double c : prof.chi) floor = std::max(floor, c);
  return floor;
}

std::vector<RegionRow> region_report(const GeodesicSpace& space, const std::vector<Point>& centers,
                                     double radius, const RegionOptions& opts) {
  ProfileOptions popts = opts.profile;
  if (!(popts.noise_floor > 0))
    popts.noise_floor = std::max(
        1e-12, plane_noise_floor(opts.eps_ladder, opts.n_per_eps, opts.estimate.seed, popts));

  std::vector<RegionRow> rows;
  for (std::size_t ci = 0; ci < centers.size(); ++ci) {
    const Point& c = centers[ci];
    RegionRow row;
    row.center = space.coords(c);
    row.diagnostic_only = space.diagnostic_only();
    row.error_bar = space.resolution() / radius;
    Region region{c, radius};
    if (opts.run_estimate) {
      try {
        row.estimate = estimate_bounds(space, region, opts.estimate);
      } catch (const Error& e) {
        row.estimate_error = e.what();
      }
    }
    try {
      row.profile = right_angle_defect_profile(space, c, opts.eps_ladder, opts.n_per_eps,
                                             opts.estimate.seed, popts);
    } catch (const Error& e) {
      row.profile_error = e.what();
    }
    try {
      Rng rng = make_rng(opts.estimate.seed, 0x3a1f, ci);
      row.multiplicity = geodesic_multiplicity_probe(space, c, radius, opts.multiplicity_pairs, rng);
    } catch (const Error& e) {
      row.multiplicity_error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cmpk
