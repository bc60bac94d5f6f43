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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmpk/criteria.hpp"
#include "cmpk/geodesic_space.hpp"

namespace cmpk {

struct Region {
  Point center;
  double radius = 0.2;
};

// One fixed set of measured configurations. Sample i draws from
// make_rng(seed, stream, i), so the set does not depend on evaluation order.
// Pythagorean, point-segment and triangle measurements share the same
// (q, [r1 r2]) draws; q's foot on [r1 r2] is always interior.
struct SampleSet {
  std::vector<CriterionId> criteria;
  std::vector<PythagoreanMeasurement> pythagorean;
  std::vector<PointSegmentMeasurement> point_segment;
  std::vector<TriangleMeasurement> triangle;
  std::vector<RightAngleMeasurement> right_angle;
  int rejected = 0;  // draws discarded for boundary feet or degeneracy
  int skipped = 0;   // right-angle draws without a constructible pair
};

struct SamplingOptions {
  CriteriaOptions criteria{};
  int max_attempts = 200;  // draws per sample before giving up
  // Draws with |q [r1 r2]| below this fraction of the configuration diameter
  // are rejected: near-collinear triples carry almost no length signal, so
  // the distance criterion cannot call a side where the angle criteria do.
  double min_offset = 0.02;
};

// Throws EstimationError if some sample finds no valid configuration within
// max_attempts draws. Right-angle draws that cannot be built are counted in
// `skipped`.
SampleSet draw_samples(const GeodesicSpace& space, const Region& region,
                       const std::vector<CriterionId>& criteria, int n_samples,
                       std::uint64_t seed, const SamplingOptions& opts = {});

struct SweepResult {
  double k = 0;
  bool cbb = true;
  bool cba = true;
  double cbb_margin = 0;  // min slack over samples; >= 0 iff cbb
  double cba_margin = 0;
  int cbb_failures = 0;
  int cba_failures = 0;
};

// Every measurement of the set evaluated at k.
SweepResult evaluate_samples(const GeodesicSpace& space, const SampleSet& set, Curvature k,
                             const CriteriaOptions& opts = {});
std::vector<TestOutcome> outcomes_at(const GeodesicSpace& space, const SampleSet& set,
                                     Curvature k, const CriteriaOptions& opts = {});

struct BoundResult {
  std::optional<double> value;  // nullopt when the bracket could not be formed
  double residual = 0;          // min slack at value
  double passing = 0;           // bracket endpoint that passes
  double failing = 0;           // bracket endpoint that fails
  int evaluations = 0;
  std::string note;
};

struct EstimateOptions {
  std::vector<CriterionId> criteria{CriterionId::kPythagorean};
  double k_lo = -2;
  double k_hi = 2;
  double resolution = 0.01;
  double expand_limit = 1024;
  int n_samples = 300;
  std::uint64_t seed = 1;
  SamplingOptions sampling{};
};

struct CurvatureEstimate {
  std::string space_id;
  Region region;
  std::vector<CriterionId> criteria;
  int n_samples = 0;
  std::uint64_t seed = 0;
  double resolution = 0;
  BoundResult cbb;  // largest k passing every CBB test
  BoundResult cba;  // smallest k passing every CBA test
  int rejected = 0;
  int skipped = 0;
};

// Bisection on the fixed sample set. A failed bracket expansion is reported
// in the bound's note, not thrown; an empty sample set throws
// EstimationError.
CurvatureEstimate estimate_bounds(const GeodesicSpace& space, const Region& region,
                                  const EstimateOptions& opts = {});
// Same, on a set already drawn with opts' criteria.
CurvatureEstimate estimate_bounds(const GeodesicSpace& space, const Region& region,
                                  const SampleSet& set, const EstimateOptions& opts);

// Largest chi over a profile on the plane with the same ladder and draws;
// this is the floor the profile classifier compares against.
double plane_noise_floor(const std::vector<double>& eps_ladder, int n_per_eps,
                         std::uint64_t seed, const ProfileOptions& opts = {});

struct RegionOptions {
  EstimateOptions estimate{};
  bool run_estimate = true;
  std::vector<double> eps_ladder{0.4, 0.2, 0.1, 0.05};
  int n_per_eps = 1024;  // non-vanishing cone-point configurations are ~1% of draws
  ProfileOptions profile{};  // noise_floor <= 0 means measure it on the plane
  int multiplicity_pairs = 200;
};

struct RegionRow {
  std::vector<double> center;
  std::optional<CurvatureEstimate> estimate;
  std::string estimate_error;
  std::optional<DefectProfile> profile;
  std::string profile_error;
  std::optional<MultiplicityReport> multiplicity;
  std::string multiplicity_error;
  bool diagnostic_only = false;
  // Distance resolution relative to the region radius; 0 on analytic spaces.
  double error_bar = 0;
};

// Per-center estimate, profile and multiplicity count. Errors are recorded
// per row and the run continues.
std::vector<RegionRow> region_report(const GeodesicSpace& space, const std::vector<Point>& centers,
                                     double radius, const RegionOptions& opts = {});

}  // namespace cmpk
