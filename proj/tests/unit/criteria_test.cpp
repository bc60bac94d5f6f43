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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cmpk/criteria.hpp"
#include "cmpk/errors.hpp"
#include "oracles.hpp"

namespace cmpk {
namespace {

constexpr double kPi = std::numbers::pi;

Point at(const GeodesicSpace& s, std::vector<double> c) { return s.point_from_coords(c); }

GeodesicSegment seg(const GeodesicSpace& s, const Point& a, const Point& b) {
  return s.minimal_geodesics(a, b).front();
}

TEST(Verdict, PureFunctionOfDefects) {
  const double tol = 1e-6;
  EXPECT_EQ(classify(Orientation::kCbbNonPositive, -1e-3, -1e-3, tol), Verdict::kPassCbb);
  EXPECT_EQ(classify(Orientation::kCbbNonPositive, 1e-3, 1e-3, tol), Verdict::kPassCba);
  EXPECT_EQ(classify(Orientation::kCbbNonPositive, 1e-7, -1e-7, tol), Verdict::kPassBoth);
  EXPECT_EQ(classify(Orientation::kCbbNonPositive, 1e-3, -1e-3, tol), Verdict::kFail);
  EXPECT_EQ(classify(Orientation::kCbbNonNegative, 1e-3, 1e-3, tol), Verdict::kPassCbb);
  EXPECT_EQ(classify(Orientation::kCbbNonNegative, -1e-3, -1e-3, tol), Verdict::kPassCba);
  EXPECT_DOUBLE_EQ(verdict_tolerance(0.2, 2), 1e-4 * 0.04);
  EXPECT_DOUBLE_EQ(verdict_tolerance(1e-4, 2), 1e-9);
  EXPECT_DOUBLE_EQ(verdict_tolerance(0.5, 3), 1e-4 * 0.125);
}

TEST(Names, RoundTrip) {
  for (auto id : {CriterionId::kPythagorean, CriterionId::kRightAngle, CriterionId::kPointSegment,
                  CriterionId::kTriangle, CriterionId::kFirstVariation, CriterionId::kAngleSum,
                  CriterionId::kMultiplicity}) {
    EXPECT_EQ(parse_criterion(to_string(id)), id);
  }
  EXPECT_FALSE(parse_criterion("toponogov").has_value());
}

TEST(Foot, PlaneMidpoint) {
  auto p = make_euclidean_plane();
  const auto f = foot_of_perpendicular(*p, at(*p, {0, 1}), seg(*p, at(*p, {-1, 0}), at(*p, {1, 0})));
  EXPECT_NEAR(f.t, 1, 1e-7);
  EXPECT_NEAR(f.distance, 1, 1e-12);
  EXPECT_TRUE(f.interior);
}

TEST(Foot, PoleOverEquatorTies) {
  auto s = make_sphere(1);
  const Point pole = at(*s, {0, 0});
  const auto g = seg(*s, at(*s, {kPi / 2, 0}), at(*s, {kPi / 2, 1.0}));
  FootOptions opts;
  opts.require_interior = false;  // every t ties, the first grid point wins
  const auto f = foot_of_perpendicular(*s, pole, g, opts);
  EXPECT_NEAR(f.distance, kPi / 2, 1e-12);
  EXPECT_FALSE(f.ties.empty());
}

TEST(Foot, TripodBranchPoint) {
  auto t = make_tripod();
  const Point q = at(*t, {2, 1});
  const auto g = seg(*t, at(*t, {0, 1}), at(*t, {1, 1}));
  const auto f = foot_of_perpendicular(*t, q, g);
  const auto brute = oracle::brute_foot(*t, q, g);
  EXPECT_NEAR(f.distance, 1, 1e-9);
  EXPECT_NEAR(f.distance, brute.distance, 1e-9);
  EXPECT_NEAR(f.t, brute.t, 1e-4);
  EXPECT_TRUE(t->same_point(f.foot, t->default_center()));
}

TEST(Foot, MatchesBruteForceOnSpaces) {
  std::vector<SpacePtr> spaces{make_sphere(1), make_hyperbolic(-1), make_cone(kPi)};
  for (const auto& s : spaces) {
    Rng rng(3);
    const Point o = s->default_center();
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
      const Point q = s->sample_ball(o, 0.5, rng);
      const auto g = seg(*s, s->sample_ball(o, 0.5, rng), s->sample_ball(o, 0.5, rng));
      if (g.length() < 0.05) continue;
      FootOptions opts;
      opts.require_interior = false;
      try {
        const auto f = foot_of_perpendicular(*s, q, g, opts);
        EXPECT_NEAR(f.distance, oracle::brute_foot(*s, q, g).distance, 1e-9) << s->id();
        ++checked;
      } catch (const DegenerateError&) {
      }
    }
    EXPECT_GT(checked, 40);
  }
}

TEST(Foot, BoundaryAndDegenerate) {
  auto p = make_euclidean_plane();
  const auto g = seg(*p, at(*p, {0, 0}), at(*p, {1, 0}));
  EXPECT_THROW(foot_of_perpendicular(*p, at(*p, {-1, 1}), g), FootOnBoundary);
  EXPECT_THROW(foot_of_perpendicular(*p, at(*p, {0.5, 0}), g), DegenerateError);
  FootOptions relaxed;
  relaxed.require_interior = false;
  const auto f = foot_of_perpendicular(*p, at(*p, {-1, 1}), g, relaxed);
  EXPECT_FALSE(f.interior);
  EXPECT_NEAR(f.t, 0, 1e-12);
}

TEST(Pythagorean, PlaneIsFlat) {
  auto p = make_euclidean_plane();
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Point q = p->sample_ball(Point{}, 1, rng);
    const auto g = seg(*p, p->sample_ball(Point{}, 1, rng), p->sample_ball(Point{}, 1, rng));
    TestOutcome o;
    try {
      o = pythagorean_test(*p, Curvature(0), q, g);
    } catch (const FootOnBoundary&) {
      continue;
    }
    EXPECT_LE(std::abs(o.defect), 1e-9);
    EXPECT_LE(std::abs(o.defect_cba), 1e-9);
    EXPECT_EQ(o.verdict, Verdict::kPassBoth);
  }
}

TEST(Pythagorean, PlaneFailsPositiveBound) {
  auto p = make_euclidean_plane();
  const auto o = pythagorean_test(*p, Curvature(1), at(*p, {0, 0.4}),
                                  seg(*p, at(*p, {-0.3, 0}), at(*p, {0.3, 0})));
  EXPECT_GT(pythagorean_defect(Curvature(1), 0.4, 0.3, 0.5), 0);
  EXPECT_GT(o.defect, o.tolerance);
  EXPECT_FALSE(passes_cbb(o.verdict));
  EXPECT_TRUE(passes_cba(o.verdict));
}

TEST(Pythagorean, TripodHasNoLowerBound) {
  auto t = make_tripod();
  const auto o = pythagorean_test(*t, Curvature(0), at(*t, {2, 1}),
                                  seg(*t, at(*t, {0, 1}), at(*t, {1, 1})));
  EXPECT_NEAR(o.defect, kPi / 2, 1e-6);
  EXPECT_EQ(o.verdict, Verdict::kPassCba);
}

TEST(Pythagorean, DefectNonDecreasingInK) {
  auto s = make_sphere(1);
  Rng rng(2);
  const Point o = s->default_center();
  for (int i = 0; i < 30; ++i) {
    PythagoreanMeasurement m;
    try {
      m = measure_pythagorean(*s, s->sample_ball(o, 0.1, rng),
                              seg(*s, s->sample_ball(o, 0.1, rng), s->sample_ball(o, 0.1, rng)));
    } catch (const Error&) {
      continue;
    }
    double prev = -10;
    for (double k = -3; k <= 3; k += 0.25) {
      const double d = evaluate_pythagorean(*s, m, Curvature(k)).defect;
      EXPECT_GE(d, prev - 1e-12);
      prev = d;
    }
  }
}

TEST(RightAngle, SphereRigidityAndSides) {
  auto s = make_sphere(1);
  const Point p = s->default_center();
  const auto at1 = right_angle_pythagorean_test(*s, Curvature(1), p, 0, kPi / 2, 0.3, 0.4);
  EXPECT_LE(std::abs(at1.defect), 1e-8);
  EXPECT_EQ(at1.verdict, Verdict::kPassBoth);
  // cos c = cos a cos b gives c^2 < a^2 + b^2.
  const double c = oracle::spherical_side(1, 0.3, 0.4, kPi / 2);
  EXPECT_LT(c * c, 0.3 * 0.3 + 0.4 * 0.4);
  const auto at0 = right_angle_pythagorean_test(*s, Curvature(0), p, 0, kPi / 2, 0.3, 0.4);
  EXPECT_LT(at0.defect, -at0.tolerance);
  EXPECT_EQ(at0.verdict, Verdict::kPassCbb);
}

TEST(RightAngle, HyperbolicAtZero) {
  auto h = make_hyperbolic(-1);
  const double c = oracle::hyperbolic_side(-1, 0.3, 0.4, kPi / 2);
  EXPECT_GT(c * c, 0.3 * 0.3 + 0.4 * 0.4);
  const auto o = right_angle_pythagorean_test(*h, Curvature(0), h->default_center(), 0.7,
                                              0.7 + kPi / 2, 0.3, 0.4);
  EXPECT_GT(o.defect, o.tolerance);
  EXPECT_EQ(o.verdict, Verdict::kPassCba);
}

TEST(RightAngle, UnavailableOnTripod) {
  auto t = make_tripod();
  EXPECT_THROW(construct_right_angle(*t, at(*t, {0, 1}), 0, kPi / 2, 0.3, 0.4),
               RightAngleUnavailable);
}

TEST(PointSegment, PlaneIsExact) {
  auto p = make_euclidean_plane();
  const auto o = point_segment_test(*p, Curvature(0), at(*p, {0.2, 0.7}),
                                    seg(*p, at(*p, {-0.5, 0}), at(*p, {0.6, 0.1})));
  for (double c : o.components) EXPECT_LE(std::abs(c), 1e-9);
  EXPECT_EQ(o.verdict, Verdict::kPassBoth);
}

TEST(PointSegment, SphereAboveFlat) {
  auto s = make_sphere(1);
  Rng rng(5);
  const Point o = s->default_center();
  for (int i = 0; i < 30; ++i) {
    const auto out = point_segment_test(
        *s, Curvature(0), s->sample_ball(o, 0.2, rng),
        seg(*s, s->sample_ball(o, 0.2, rng), s->sample_ball(o, 0.2, rng)));
    EXPECT_GE(out.defect, -out.tolerance);
    EXPECT_TRUE(passes_cbb(out.verdict));
  }
}

TEST(PointSegment, ConeNearApexIsCbbZero) {
  auto c = make_cone(kPi);
  // Segment from (0.5, 0) to (0.5, 1.4) passes close to the apex.
  const auto g = seg(*c, at(*c, {0.5, 0}), at(*c, {0.5, 1.4}));
  const auto near = point_segment_test(*c, Curvature(0), at(*c, {0.6, 2.3}), g);
  EXPECT_GE(near.defect, -near.tolerance);
  EXPECT_TRUE(passes_cbb(near.verdict));
  // Off-apex, all three points in one flat sector: equality.
  const auto g2 = seg(*c, at(*c, {2, 0}), at(*c, {2, 0.3}));
  const auto flat = point_segment_test(*c, Curvature(0), at(*c, {2.4, 0.15}), g2);
  for (double v : flat.components) EXPECT_LE(std::abs(v), 1e-9);
}

TEST(Triangle, PlaneRightTriangle) {
  auto p = make_euclidean_plane();
  const auto o = triangle_comparison_test(*p, Curvature(0), at(*p, {0, 0}), at(*p, {3, 0}),
                                          at(*p, {0, 4}));
  for (double c : o.components) EXPECT_LE(std::abs(c), 1e-6);
  EXPECT_EQ(o.verdict, Verdict::kPassBoth);
}

TEST(Triangle, OctantAtZero) {
  auto s = make_sphere(1);
  EXPECT_NEAR(comparison_angle(Curvature(0), {kPi / 2, kPi / 2, kPi / 2}),
              oracle::model_angle(0, 1, 1, 1), 1e-12);
  const auto o = triangle_comparison_test(*s, Curvature(0), at(*s, {1, 0, 0}), at(*s, {0, 1, 0}),
                                          at(*s, {0, 0, 1}));
  for (double c : o.components) EXPECT_NEAR(c, kPi / 2 - kPi / 3, 1e-6);
  EXPECT_EQ(o.verdict, Verdict::kPassCbb);
}

TEST(Triangle, TripodTips) {
  auto t = make_tripod();
  const auto m = measure_triangle(*t, at(*t, {0, 1}), at(*t, {1, 1}), at(*t, {2, 1}), Curvature(0));
  for (double a : m.max_angle) EXPECT_NEAR(a, 0, 1e-9);
  const auto o = evaluate_triangle(*t, m, Curvature(0));
  EXPECT_NEAR(o.defect, -kPi / 3, 1e-9);
  EXPECT_EQ(o.verdict, Verdict::kPassCba);
}

TEST(Angle, PlaneOrthogonal) {
  auto p = make_euclidean_plane();
  const Point o{};
  const auto e = angle_at(*p, seg(*p, o, at(*p, {1, 0})), seg(*p, o, at(*p, {0, 2})), Curvature(0));
  for (double v : e.values) EXPECT_NEAR(v, kPi / 2, 1e-12);
  EXPECT_NEAR(e.angle, kPi / 2, 1e-12);
}

TEST(Angle, OctantVertexConstantLadder) {
  auto s = make_sphere(1);
  const Point v = at(*s, {0, 0, 1});
  const auto e = angle_at(*s, seg(*s, v, at(*s, {1, 0, 0})), seg(*s, v, at(*s, {0, 1, 0})),
                          Curvature(1));
  for (double x : e.values) EXPECT_NEAR(x, kPi / 2, 1e-9);
  EXPECT_TRUE(e.non_decreasing);
  EXPECT_TRUE(e.non_increasing);
}

TEST(Angle, ConeApexOpening) {
  auto c = make_cone(kPi);
  const Point apex{};
  const double delta = 1.0;
  const auto e = angle_at(*c, seg(*c, apex, at(*c, {1, 0})), seg(*c, apex, at(*c, {1, delta})),
                          Curvature(0));
  const double oracle_angle =
      oracle::model_angle(0, 0.1, 0.1, oracle::cone_distance(kPi, 0.1, 0, 0.1, delta));
  EXPECT_NEAR(oracle_angle, delta, 1e-12);
  for (double x : e.values) EXPECT_NEAR(x, delta, 1e-9);
}

TEST(Angle, RequiresSharedVertex) {
  auto p = make_euclidean_plane();
  EXPECT_THROW(angle_at(*p, seg(*p, Point{}, at(*p, {1, 0})), seg(*p, at(*p, {0, 1}), at(*p, {1, 1})),
                        Curvature(0)),
               DomainError);
}

TEST(FirstVariation, PlaneFootHasZeroSlope) {
  auto p = make_euclidean_plane();
  const auto r = first_variation_check(*p, at(*p, {0, 1}), seg(*p, at(*p, {-1, 0}), at(*p, {1, 0})),
                                       1, {1e-7});
  EXPECT_NEAR(r.slopes[0], 0, 1e-6);
}

TEST(FirstVariation, PlaneSixtyDegrees) {
  auto p = make_euclidean_plane();
  const auto r = first_variation_check(*p, at(*p, {0.5, std::sqrt(3.0) / 2}),
                                       seg(*p, at(*p, {-1, 0}), at(*p, {1, 0})), 1,
                                       {1e-2, 1e-3, 1e-4});
  EXPECT_NEAR(r.angle, kPi / 3, 1e-6);
  EXPECT_NEAR(r.slopes.back(), -0.5, 1e-4);
  EXPECT_TRUE(r.decaying);
  for (double order : r.orders) EXPECT_GE(order, 0.9);
}

TEST(FirstVariation, SphereFortyFiveDegrees) {
  auto s = make_sphere(1);
  const Point p = s->default_center();
  const Point q = *s->shoot(p, kPi / 4, 0.5);
  const Point a = *s->shoot(p, kPi, 0.4);
  const Point b = *s->shoot(p, 0, 0.4);
  const auto r = first_variation_check(*s, q, seg(*s, a, b), 0.4, {1e-3, 1e-4});
  EXPECT_NEAR(r.angle, kPi / 4, 1e-5);
  EXPECT_NEAR(r.slopes.back(), -std::sqrt(2.0) / 2, 1e-3);
}

TEST(AngleSum, SmoothSpaces) {
  auto p = make_euclidean_plane();
  const auto g = seg(*p, at(*p, {-1, 0}), at(*p, {1, 0.2}));
  const auto rp = angle_sum_check(*p, at(*p, {0.3, 0.9}), g, 0.7);
  EXPECT_NEAR(rp.sum, kPi, 1e-5);

  auto s = make_sphere(1);
  const Point c = s->default_center();
  const auto gs = seg(*s, *s->shoot(c, 0, 0.3), *s->shoot(c, 2.5, 0.3));
  const auto rs = angle_sum_check(*s, *s->shoot(c, 1.0, 0.4), gs, 0.2);
  EXPECT_NEAR(rs.sum, kPi, 1e-4);
}

TEST(AngleSum, TripodBranch) {
  auto t = make_tripod();
  const auto r = angle_sum_check(*t, at(*t, {2, 1}), seg(*t, at(*t, {0, 1}), at(*t, {1, 1})), 1);
  EXPECT_NEAR(r.angle_to_start, kPi, 1e-9);
  EXPECT_NEAR(r.angle_to_end, kPi, 1e-9);
  EXPECT_NEAR(r.excess, kPi, 1e-9);
}

TEST(Multiplicity, PlaneHasNone) {
  auto p = make_euclidean_plane();
  Rng rng(1);
  const auto r = geodesic_multiplicity_probe(*p, Point{}, 1, 500, rng);
  EXPECT_EQ(r.pairs, 500);
  EXPECT_EQ(r.multi_pairs, 0);
}

TEST(Multiplicity, ConeTieLocusAndAntipodes) {
  auto c = make_cone(kPi);
  Rng rng(2);
  // The two unrollings tie at angular offset L/2.
  const auto r = geodesic_multiplicity_probe(*c, at(*c, {1, 0}), 0.5, 1000, rng,
                                             {{at(*c, {1, 0}), at(*c, {0.8, kPi / 2})}});
  EXPECT_GE(r.multi_pairs, 1);
  ASSERT_FALSE(r.examples.empty());

  auto s = make_sphere(1);
  const auto rs = geodesic_multiplicity_probe(*s, s->default_center(), 0.1, 10, rng,
                                              {{at(*s, {0, 0, 1}), at(*s, {0, 0, -1})}});
  EXPECT_EQ(rs.multi_pairs, 1);
}

TEST(Profile, PlaneIsZero) {
  auto p = make_euclidean_plane();
  const auto prof = right_angle_defect_profile(*p, Point{}, {0.4, 0.2, 0.1}, 32, 1);
  for (double c : prof.chi) EXPECT_LE(c, 1e-12);
  EXPECT_EQ(prof.classification, ProfileClass::kVanishing);
}

TEST(Profile, SphereDecaysQuadratically) {
  auto s = make_sphere(1);
  const auto prof = right_angle_defect_profile(*s, s->default_center(), {0.4, 0.2, 0.1, 0.05}, 32, 1);
  for (std::size_t i = 1; i < prof.chi.size(); ++i) {
    EXPECT_NEAR(prof.chi[i] / prof.chi[i - 1], 0.25, 0.02);
  }
  EXPECT_EQ(prof.classification, ProfileClass::kVanishing);
}

TEST(Profile, ConeApexStaysPositive) {
  auto c = make_cone(kPi);
  const auto prof = right_angle_defect_profile(*c, Point{}, {0.4, 0.2, 0.1, 0.05}, 1024, 1);
  EXPECT_TRUE(prof.valid);
  for (double x : prof.chi) EXPECT_GT(x, 0.1);
  EXPECT_EQ(prof.classification, ProfileClass::kNonVanishing);
}

TEST(Profile, Classifier) {
  EXPECT_EQ(classify_profile({0.2, 0.1}, {0.3, 0.29}, 1e-12), ProfileClass::kNonVanishing);
  EXPECT_EQ(classify_profile({0.2, 0.1}, {1e-3, 2.5e-4}, 1e-12), ProfileClass::kVanishing);
  EXPECT_EQ(classify_profile({0.2, 0.1}, {1e-3, 3e-12}, 1e-12), ProfileClass::kVanishing);
  EXPECT_EQ(classify_profile({0.2, 0.1}, {1e-3, 7.5e-4}, 1e-12), ProfileClass::kInconclusive);
}

}  // namespace
}  // namespace cmpk
