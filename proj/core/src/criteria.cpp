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

#include "cmpk/criteria.hpp"
#include "cmpk/errors.hpp"

namespace cmpk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = std::numbers::pi / 2;

using NamedPoints = std::initializer_list<std::pair<const char*, const Point*>>;
using NamedDistances = std::initializer_list<std::pair<const char*, double>>;

ConfigSnapshot snapshot(const GeodesicSpace& space, NamedPoints pts, NamedDistances ds) {
  ConfigSnapshot s;
  for (auto& [name, p] : pts) s.points.emplace_back(name, space.coords(*p));
  for (auto& [name, d] : ds) s.distances.emplace_back(name, d);
  return s;
}

bool admissible(Curvature k, double perimeter, const Tolerances& tol) {
  return !k.positive() || perimeter < k.max_perimeter(tol);
}

TestOutcome finish(TestOutcome o, const Tolerances& tol, int power) {
  o.tolerance = verdict_tolerance(o.scale, power, tol);
  o.verdict = classify(o.orientation, o.defect, o.defect_cba, o.tolerance);
  return o;
}

// Inadmissible comparison triangles put the defect at +-inf on the
// upper-bound side: CBB fails, CBA holds vacuously.
double inadmissible_defect(Orientation o) {
  return o == Orientation::kCbbNonPositive ? kInf : -kInf;
}

}  // namespace

std::string_view to_string(CriterionId id) {
  switch (id) {
    case CriterionId::kPythagorean: return "pythagorean";
    case CriterionId::kRightAngle: return "right-angle";
    case CriterionId::kPointSegment: return "point-segment";
    case CriterionId::kTriangle: return "triangle";
    case CriterionId::kFirstVariation: return "first-variation";
    case CriterionId::kAngleSum: return "angle-sum";
    case CriterionId::kMultiplicity: return "multiplicity";
  }
  return "?";
}

std::optional<CriterionId> parse_criterion(std::string_view name) {
  for (auto id : {CriterionId::kPythagorean, CriterionId::kRightAngle, CriterionId::kPointSegment,
                  CriterionId::kTriangle, CriterionId::kFirstVariation, CriterionId::kAngleSum,
                  CriterionId::kMultiplicity})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPassCbb: return "pass_CBB";
    case Verdict::kPassCba: return "pass_CBA";
    case Verdict::kPassBoth: return "pass_both";
    case Verdict::kFail: return "fail";
  }
  return "?";
}

double verdict_tolerance(double scale, int power, const Tolerances& tol) {
  return std::max(tol.verdict_abs, tol.verdict_scale * std::pow(scale, power));
}

double cbb_margin(Orientation o, double d, double tol) {
  return o == Orientation::kCbbNonPositive ? tol - d : d + tol;
}

double cba_margin(Orientation o, double d, double tol) {
  return o == Orientation::kCbbNonPositive ? d + tol : tol - d;
}

Verdict classify(Orientation o, double cbb_defect, double cba_defect, double tol) {
  bool cbb = cbb_margin(o, cbb_defect, tol) >= 0;
  bool cba = cba_margin(o, cba_defect, tol) >= 0;
  if (cbb && cba) return Verdict::kPassBoth;
  if (cbb) return Verdict::kPassCbb;
  if (cba) return Verdict::kPassCba;
  return Verdict::kFail;
}

// --- Pythagorean -----------------------------------------------------------

PythagoreanMeasurement measure_pythagorean(const GeodesicSpace& space, const Point& q,
                                           const GeodesicSegment& seg,
                                           const CriteriaOptions& opts) {
  const Tolerances& tol = opts.tol;
  PythagoreanMeasurement m;
  m.foot = foot_of_perpendicular(space, q, seg, opts.foot);
  m.q = q;
  m.r1 = seg.start();
  m.r2 = seg.end();
  m.p = m.foot.foot;
  m.d_qp = m.foot.distance;
  m.d_pr1 = space.distance(m.p, m.r1);
  m.d_pr2 = space.distance(m.p, m.r2);
  if (m.d_pr1 < tol.geodesic || m.d_pr2 < tol.geodesic)
    throw DegenerateError("foot coincides with a segment endpoint");
  auto f = space.distance_from(q);
  m.d_qr1 = f(m.r1);
  m.d_qr2 = f(m.r2);
  m.scale = std::max({m.d_qr1, m.d_qr2, seg.length()});
  return m;
}

TestOutcome evaluate_pythagorean(const GeodesicSpace& space, const PythagoreanMeasurement& m,
                                 Curvature k, const CriteriaOptions& opts) {
  const Tolerances& tol = opts.tol;
  TestOutcome o;
  o.criterion = CriterionId::kPythagorean;
  o.k = k.value();
  o.scale = m.scale;
  o.orientation = Orientation::kCbbNonPositive;
  o.config = snapshot(space, {{"q", &m.q}, {"r1", &m.r1}, {"r2", &m.r2}, {"p", &m.p}},
                      {{"qp", m.d_qp}, {"pr1", m.d_pr1}, {"pr2", m.d_pr2}, {"qr1", m.d_qr1},
                       {"qr2", m.d_qr2}});
  o.config.multi_geodesic = !m.foot.ties.empty();
  bool ok = admissible(k, m.d_qp + m.d_pr1 + m.d_qr1, tol) &&
            admissible(k, m.d_qp + m.d_pr2 + m.d_qr2, tol);
  if (!ok) {
    o.admissible = false;
    o.defect = o.defect_cba = inadmissible_defect(o.orientation);
    return finish(o, tol, 2);
  }
  double d1 = comparison_angle(k, {m.d_qp, m.d_pr1, m.d_qr1}, tol) - kHalfPi;
  double d2 = comparison_angle(k, {m.d_qp, m.d_pr2, m.d_qr2}, tol) - kHalfPi;
  o.components = {d1, d2};
  o.defect = std::max(d1, d2);
  o.defect_cba = std::min(d1, d2);
  return finish(o, tol, 2);
}

TestOutcome pythagorean_test(const GeodesicSpace& space, Curvature k, const Point& q,
                             const GeodesicSegment& seg, const CriteriaOptions& opts) {
  return evaluate_pythagorean(space, measure_pythagorean(space, q, seg, opts), k, opts);
}

// --- Right angle -----------------------------------------------------------

RightAngleMeasurement construct_right_angle(const GeodesicSpace& space, const Point& p,
                                            double dir_q, double dir_r, double leg1, double leg2,
                                            const CriteriaOptions& opts) {
  if (!(leg1 > 0 && leg2 > 0)) throw DomainError("right angle: legs must be positive");
  auto q = space.shoot(p, dir_q, leg1);
  auto r = space.shoot(p, dir_r, leg2);
  auto r1 = space.shoot(p, dir_r + std::numbers::pi, leg2);
  if (!q || !r || !r1) throw RightAngleUnavailable("geodesic shooting unavailable here");

  const double lim = 1e-6 * std::min(leg1, leg2);
  RightAngleMeasurement m;
  m.p = p;
  m.q = *q;
  m.r = *r;
  m.d_pq = space.distance(p, m.q);
  m.d_pr = space.distance(p, m.r);
  m.d_qr = space.distance(m.q, m.r);
  if (std::abs(m.d_pq - leg1) > 1e-6 * leg1 || std::abs(m.d_pr - leg2) > 1e-6 * leg2 ||
      std::abs(space.distance(*r1, m.r) - 2 * leg2) > 1e-6 * leg2)
    throw RightAngleUnavailable("a leg of the right angle is not minimal");

  try {
    auto line = space.minimal_geodesics(*r1, m.r).front();
    FootOptions fo = opts.foot;
    fo.require_interior = false;
    auto foot = foot_of_perpendicular(space, m.q, line, fo);
    if (space.distance(foot.foot, p) > lim)
      throw RightAngleUnavailable("foot of the constructed pair misses the vertex");
  } catch (const DegenerateError& e) {
    throw RightAngleUnavailable(e.what());
  }
  m.scale = std::max({m.d_pq, m.d_pr, m.d_qr});
  return m;
}

TestOutcome evaluate_right_angle(const GeodesicSpace& space, const RightAngleMeasurement& m,
                                 Curvature k, const CriteriaOptions& opts) {
  const Tolerances& tol = opts.tol;
  TestOutcome o;
  o.criterion = CriterionId::kRightAngle;
  o.k = k.value();
  o.scale = m.scale;
  o.orientation = Orientation::kCbbNonPositive;
  o.config = snapshot(space, {{"p", &m.p}, {"q", &m.q}, {"r", &m.r}},
                      {{"pq", m.d_pq}, {"pr", m.d_pr}, {"qr", m.d_qr}});
  if (!admissible(k, m.d_pq + m.d_pr + m.d_qr, tol)) {
    o.admissible = false;
    o.defect = o.defect_cba = inadmissible_defect(o.orientation);
    return finish(o, tol, 2);
  }
  double d = comparison_angle(k, {m.d_pq, m.d_pr, m.d_qr}, tol) - kHalfPi;
  o.components = {d};
  o.defect = o.defect_cba = d;
  return finish(o, tol, 2);
}

TestOutcome right_angle_pythagorean_test(const GeodesicSpace& space, Curvature k, const Point& p,
                                         double dir_q, double dir_r, double leg1, double leg2,
                                         const CriteriaOptions& opts) {
  return evaluate_right_angle(
      space, construct_right_angle(space, p, dir_q, dir_r, leg1, leg2, opts), k, opts);
}

// --- Point to segment ------------------------------------------------------

PointSegmentMeasurement measure_point_segment(const GeodesicSpace& space, const Point& q,
                                              const GeodesicSegment& seg,
                                              const CriteriaOptions& opts) {
  const Tolerances& tol = opts.tol;
  PointSegmentMeasurement m;
  m.q = q;
  m.p = seg.start();
  m.r = seg.end();
  m.length = seg.length();
  if (m.length < tol.geodesic) throw DegenerateError("segment has zero length");
  auto f = space.distance_from(q);
  m.d_qp = f(m.p);
  m.d_qr = f(m.r);
  const int n = std::max(opts.probes, 2);
  for (int i = 0; i < n; ++i) {
    double t = 0.5 * m.length * (1 - std::cos(std::numbers::pi * i / (n - 1)));
    if (i == 0) t = 0;
    if (i == n - 1) t = m.length;
    m.t.push_back(t);
    m.d_qs.push_back(i == 0 ? m.d_qp : i == n - 1 ? m.d_qr : f(seg.at(t)));
  }
  m.scale = std::max({m.d_qp, m.d_qr, m.length});
  return m;
}

TestOutcome evaluate_point_segment(const GeodesicSpace& space, const PointSegmentMeasurement& m,
                                   Curvature k, const CriteriaOptions& opts) {
  const Tolerances& tol = opts.tol;
  TestOutcome o;
  o.criterion = CriterionId::kPointSegment;
  o.k = k.value();
  o.scale = m.scale;
  o.orientation = Orientation::kCbbNonNegative;
  o.config = snapshot(space, {{"q", &m.q}, {"p", &m.p}, {"r", &m.r}},
                      {{"qp", m.d_qp}, {"qr", m.d_qr}, {"pr", m.length}});
  if (!admissible(k, m.d_qp + m.d_qr + m.length, tol)) {
    o.admissible = false;
    o.defect = o.defect_cba = inadmissible_defect(o.orientation);
    return finish(o, tol, 3);
  }
  o.defect = kInf;
  o.defect_cba = -kInf;
  for (std::size_t i = 0; i < m.t.size(); ++i) {
    double d = m.d_qs[i] - comparison_distance_at(k, m.d_qp, m.d_qr, m.length, m.t[i], tol);
    o.components.push_back(d);
    o.defect = std::min(o.defect, d);
    o.defect_cba = std::max(o.defect_cba, d);
  }
  return finish(o, tol, 3);
}

TestOutcome point_segment_test(const GeodesicSpace& space, Curvature k, const Point& q,
                               const GeodesicSegment& seg, const CriteriaOptions& opts) {
  return evaluate_point_segment(space, measure_point_segment(space, q, seg, opts), k, opts);
}

// --- Triangle --------------------------------------------------------------

TriangleMeasurement measure_triangle(const GeodesicSpace& space, const Point& p, const Point& q,
                                     const Point& r, Curvature k0, const CriteriaOptions& opts) {
  const Tolerances& tol = opts.tol;
  TriangleMeasurement m;
  m.v = {p, q, r};
  // geo[i][j]: geodesics from v[i] to v[j].
  std::vector<GeodesicSegment> geo[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      geo[i][j] = space.minimal_geodesics(m.v[i], m.v[j]);
      for (auto& g : geo[i][j]) geo[j][i].push_back(g.reversed());
      if (geo[i][j].front().length() < tol.geodesic)
        throw DegenerateError("triangle has a zero-length side");
      if (geo[i][j].size() > 1) m.multi_geodesic = true;
    }
  m.opposite = {space.distance(q, r), space.distance(p, r), space.distance(p, q)};

  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, l = (i + 2) % 3;
    double lo = kInf, hi = -kInf;
    for (auto& a : geo[i][j])
      for (auto& b : geo[i][l]) {
        auto est = angle_at(space, a, b, k0, opts.ladder);
        if (!est.non_decreasing && !est.non_increasing && !space.diagnostic_only())
          throw LadderFailure("non-monotone angle ladder at a triangle vertex");
        lo = std::min(lo, est.angle);
        hi = std::max(hi, est.angle);
      }
    m.min_angle[i] = lo;
    m.max_angle[i] = hi;
  }
  m.scale = *std::max_element(m.opposite.begin(), m.opposite.end());
  return m;
}

TestOutcome evaluate_triangle(const GeodesicSpace& space, const TriangleMeasurement& m,
                              Curvature k, const CriteriaOptions& opts) {
  const Tolerances& tol = opts.tol;
  TestOutcome o;
  o.criterion = CriterionId::kTriangle;
  o.k = k.value();
  o.scale = m.scale;
  o.orientation = Orientation::kCbbNonNegative;
  o.config = snapshot(space, {{"p", &m.v[0]}, {"q", &m.v[1]}, {"r", &m.v[2]}},
                      {{"qr", m.opposite[0]}, {"pr", m.opposite[1]}, {"pq", m.opposite[2]}});
  o.config.multi_geodesic = m.multi_geodesic;
  if (!admissible(k, m.opposite[0] + m.opposite[1] + m.opposite[2], tol)) {
    o.admissible = false;
    o.defect = o.defect_cba = inadmissible_defect(o.orientation);
    return finish(o, tol, 2);
  }
  o.defect = kInf;
  o.defect_cba = -kInf;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, l = (i + 2) % 3;
    // Sides at vertex i: to j is opposite l, to l is opposite j.
    double model = comparison_angle(k, {m.opposite[l], m.opposite[j], m.opposite[i]}, tol);
    double lo = m.min_angle[i] - model, hi = m.max_angle[i] - model;
    o.components.push_back(lo);
    o.defect = std::min(o.defect, lo);
    o.defect_cba = std::max(o.defect_cba, hi);
  }
  return finish(o, tol, 2);
}

TestOutcome triangle_comparison_test(const GeodesicSpace& space, Curvature k, const Point& p,
                                     const Point& q, const Point& r, const CriteriaOptions& opts) {
  return evaluate_triangle(space, measure_triangle(space, p, q, r, k, opts), k, opts);
}

}  // namespace cmpk
