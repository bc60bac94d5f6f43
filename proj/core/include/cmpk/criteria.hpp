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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmpk/geodesic_space.hpp"
#include "cmpk/model_geometry.hpp"

namespace cmpk {

enum class CriterionId {
  kPythagorean,
  kRightAngle,
  kPointSegment,
  kTriangle,
  kFirstVariation,
  kAngleSum,
  kMultiplicity,
};

std::string_view to_string(CriterionId id);
// Accepts the CLI spellings: pythagorean, right-angle, point-segment,
// triangle, first-variation, angle-sum, multiplicity.
std::optional<CriterionId> parse_criterion(std::string_view name);

enum class Verdict { kPassCbb, kPassCba, kPassBoth, kFail };

std::string_view to_string(Verdict v);
inline bool passes_cbb(Verdict v) { return v == Verdict::kPassCbb || v == Verdict::kPassBoth; }
inline bool passes_cba(Verdict v) { return v == Verdict::kPassCba || v == Verdict::kPassBoth; }

// Which side of zero the lower-curvature-bound inequality puts the defect.
enum class Orientation {
  kCbbNonPositive,  // CBB holds iff defect <= tol (comparison angle - pi/2)
  kCbbNonNegative,  // CBB holds iff defect >= -tol (angle or distance gaps)
};

// max(tau_abs, c_tol * scale^power). Angle defects use power 2, length
// defects power 3, so both shrink like the curvature signal does.
double verdict_tolerance(double scale, int power, const Tolerances& tol = default_tolerances());

// The verdict as a pure function of the two worst-case defects.
Verdict classify(Orientation o, double cbb_defect, double cba_defect, double tol);

// Signed slack of the CBB (resp. CBA) inequality; >= 0 means it passes.
double cbb_margin(Orientation o, double cbb_defect, double tol);
double cba_margin(Orientation o, double cba_defect, double tol);

struct ConfigSnapshot {
  std::vector<std::pair<std::string, std::vector<double>>> points;
  std::vector<std::pair<std::string, double>> distances;
  bool multi_geodesic = false;
};

struct TestOutcome {
  CriterionId criterion = CriterionId::kPythagorean;
  double k = 0;
  double scale = 0;  // diameter of the configuration
  Orientation orientation = Orientation::kCbbNonPositive;
  double defect = 0;      // worst case for the CBB inequality
  double defect_cba = 0;  // worst case for the CBA inequality
  std::vector<double> components;  // per-endpoint, per-probe or per-vertex
  double tolerance = 0;
  Verdict verdict = Verdict::kFail;
  // False when k > 0 and the comparison triangle does not exist; the CBB
  // side then fails and the CBA side holds vacuously.
  bool admissible = true;
  ConfigSnapshot config;

  double cbb_margin() const { return cmpk::cbb_margin(orientation, defect, tolerance); }
  double cba_margin() const { return cmpk::cba_margin(orientation, defect_cba, tolerance); }
};

// ---------------------------------------------------------------------------
// Foot of the perpendicular.

struct FootOptions {
  int grid = 64;             // initial samples along the segment
  double rel_tol = 1e-8;     // golden-section bracket width, times length
  double margin = 1e-3;      // interior margin, times length
  bool require_interior = true;
};

struct FootResult {
  double t = 0;         // arclength of the minimizer
  double distance = 0;  // |q p| = |q [r1 r2]|
  Point foot;
  bool interior = false;
  // Other grid minima within the tie tolerance of `distance`, more than one
  // grid step from t.
  std::vector<double> ties;
};

// Global minimizer of t -> |q seg(t)| by a dense grid and golden-section
// refinement of the best bracket. Throws DegenerateError if q lies on the
// segment and FootOnBoundary if the minimizer is within the margin of an
// endpoint (unless require_interior is false).
FootResult foot_of_perpendicular(const GeodesicSpace& space, const Point& q,
                                 const GeodesicSegment& seg, const FootOptions& opts = {});

// ---------------------------------------------------------------------------
// Angles.

struct LadderOptions {
  double first_fraction = 0.1;  // t0 = first_fraction * min segment length
  double ratio = 0.5;
  int rungs = 8;
  double monotone_tol = 1e-9;
};

struct AngleEstimate {
  Point vertex;
  std::vector<double> scales;  // strictly decreasing
  std::vector<double> values;  // comparison angle at each scale
  double angle = 0;            // last rung
  double extrapolated = 0;     // Richardson, assuming O(t^2) error
  bool non_decreasing = true;  // the lower-bound expectation
  bool non_increasing = true;
};

// Angle between two segments leaving the same point, as the limit of
// comparison angles at curvature k0 along a geometric ladder. Throws
// DomainError if the segments do not share a start point and LadderFailure
// if a rung falls below 10 * tau_geo.
AngleEstimate angle_at(const GeodesicSpace& space, const GeodesicSegment& toward_q,
                       const GeodesicSegment& toward_r, Curvature k0,
                       const LadderOptions& opts = {});

// ---------------------------------------------------------------------------
// Comparison criteria. Each splits into a k-independent measurement of the
// space and a pure model evaluation, so one measurement serves a sweep in k.

struct CriteriaOptions {
  Tolerances tol{};
  FootOptions foot{};
  LadderOptions ladder{};
  int probes = 17;  // point-segment probes, Chebyshev-Lobatto spaced
};

struct PythagoreanMeasurement {
  Point q, r1, r2, p;
  FootResult foot;
  double d_qp = 0, d_pr1 = 0, d_pr2 = 0, d_qr1 = 0, d_qr2 = 0;
  double scale = 0;
};

PythagoreanMeasurement measure_pythagorean(const GeodesicSpace& space, const Point& q,
                                           const GeodesicSegment& seg,
                                           const CriteriaOptions& opts = {});
TestOutcome evaluate_pythagorean(const GeodesicSpace& space, const PythagoreanMeasurement& m,
                                 Curvature k, const CriteriaOptions& opts = {});
TestOutcome pythagorean_test(const GeodesicSpace& space, Curvature k, const Point& q,
                             const GeodesicSegment& seg, const CriteriaOptions& opts = {});

struct RightAngleMeasurement {
  Point p, q, r;
  double d_pq = 0, d_pr = 0, d_qr = 0;
  double scale = 0;
};

// q and r shot from p along headings dir_q and dir_r, verified against the
// foot of q on the segment through p along dir_r. Throws
// RightAngleUnavailable when a leg is not minimal or the foot misses p by
// more than 1e-6 * leg.
RightAngleMeasurement construct_right_angle(const GeodesicSpace& space, const Point& p,
                                            double dir_q, double dir_r, double leg1, double leg2,
                                            const CriteriaOptions& opts = {});
TestOutcome evaluate_right_angle(const GeodesicSpace& space, const RightAngleMeasurement& m,
                                 Curvature k, const CriteriaOptions& opts = {});
TestOutcome right_angle_pythagorean_test(const GeodesicSpace& space, Curvature k, const Point& p,
                                         double dir_q, double dir_r, double leg1, double leg2,
                                         const CriteriaOptions& opts = {});

struct PointSegmentMeasurement {
  Point q, p, r;  // p, r are the segment endpoints
  double d_qp = 0, d_qr = 0, length = 0;
  std::vector<double> t;     // probe arclengths
  std::vector<double> d_qs;  // |q seg(t)|
  double scale = 0;
};

PointSegmentMeasurement measure_point_segment(const GeodesicSpace& space, const Point& q,
                                              const GeodesicSegment& seg,
                                              const CriteriaOptions& opts = {});
TestOutcome evaluate_point_segment(const GeodesicSpace& space, const PointSegmentMeasurement& m,
                                   Curvature k, const CriteriaOptions& opts = {});
TestOutcome point_segment_test(const GeodesicSpace& space, Curvature k, const Point& q,
                               const GeodesicSegment& seg, const CriteriaOptions& opts = {});

struct TriangleMeasurement {
  std::array<Point, 3> v;
  std::array<double, 3> opposite{};   // side opposite each vertex
  std::array<double, 3> min_angle{};  // over all geodesic choices
  std::array<double, 3> max_angle{};
  bool multi_geodesic = false;
  double scale = 0;
};

// Vertex angles estimated with angle_at at curvature k0.
TriangleMeasurement measure_triangle(const GeodesicSpace& space, const Point& p, const Point& q,
                                     const Point& r, Curvature k0,
                                     const CriteriaOptions& opts = {});
TestOutcome evaluate_triangle(const GeodesicSpace& space, const TriangleMeasurement& m,
                              Curvature k, const CriteriaOptions& opts = {});
TestOutcome triangle_comparison_test(const GeodesicSpace& space, Curvature k, const Point& p,
                                     const Point& q, const Point& r,
                                     const CriteriaOptions& opts = {});

// ---------------------------------------------------------------------------
// Diagnostics.

struct FirstVariationReport {
  double t = 0;
  double distance = 0;  // |q p|
  double angle = 0;     // between [pq] and the segment's forward direction
  double target = 0;    // -cos(angle)
  std::vector<double> steps;
  std::vector<double> slopes;
  std::vector<double> errors;  // |slope - target|
  std::vector<double> orders;  // observed convergence order between steps
  bool decaying = false;       // errors shrink along the step ladder
  bool multi_geodesic = false;
};

// Forward differences of t -> |q seg(t)| at t_star against -cos(angle).
FirstVariationReport first_variation_check(const GeodesicSpace& space, const Point& q,
                                           const GeodesicSegment& seg, double t_star,
                                           const std::vector<double>& steps,
                                           const CriteriaOptions& opts = {});

struct AngleSumReport {
  double t = 0;
  double angle_to_start = 0;  // angle q p r1
  double angle_to_end = 0;    // angle q p r2
  double sum = 0;
  double excess = 0;  // sum - pi
};

AngleSumReport angle_sum_check(const GeodesicSpace& space, const Point& q,
                               const GeodesicSegment& seg, double t_interior,
                               const CriteriaOptions& opts = {});

struct MultiplicityReport {
  int pairs = 0;
  int multi_pairs = 0;
  std::vector<std::pair<Point, Point>> examples;  // first few multi pairs
};

// Samples pairs in the ball (center, radius) and counts pairs with two or
// more minimal geodesics; `extra_pairs` are probed as well.
MultiplicityReport geodesic_multiplicity_probe(
    const GeodesicSpace& space, const Point& center, double radius, int n_pairs, Rng& rng,
    const std::vector<std::pair<Point, Point>>& extra_pairs = {});

enum class ProfileClass { kVanishing, kNonVanishing, kInconclusive };
std::string_view to_string(ProfileClass c);

struct DefectProfile {
  std::vector<double> eps;       // strictly decreasing
  std::vector<double> chi;       // max | |qr|^2/(|pq|^2+|pr|^2) - 1 |
  std::vector<int> attempted;
  std::vector<int> skipped;      // RightAngleUnavailable
  std::vector<double> skip_fraction;
  double noise_floor = 0;
  double threshold = 0;          // 4 * noise_floor
  bool valid = true;             // no level skipped more than half
  ProfileClass classification = ProfileClass::kInconclusive;
};

struct ProfileOptions {
  double noise_floor = 1e-12;
  // Legs are drawn uniformly in [leg_min, leg_max] * eps/2; the vertex is
  // drawn in the ball of radius eps/2.
  double leg_min = 0.1;
  double leg_max = 0.5;
  CriteriaOptions criteria{};
};

// Right-angle configurations at every ladder level reuse the same random
// draws (index i uses make_rng(seed, stream, i)), scaled by eps, so
// self-similar points give identical chi across the ladder.
DefectProfile right_angle_defect_profile(const GeodesicSpace& space, const Point& x,
                                       const std::vector<double>& eps_ladder, int n_per_eps,
                                       std::uint64_t seed, const ProfileOptions& opts = {});

// Vanishing if chi(eps_min) <= 4 * floor or chi decays at least like
// sqrt(eps) between the two smallest levels; non-vanishing if it is above
// the threshold and holds at least 80% of the previous level; otherwise
// inconclusive.
ProfileClass classify_profile(const std::vector<double>& eps, const std::vector<double>& chi,
                              double noise_floor);

}  // namespace cmpk
