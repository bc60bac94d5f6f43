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
#include <limits>
#include <numbers>
#include <random>

#include "cmpk/errors.hpp"
#include "cmpk/model_geometry.hpp"
#include "oracles.hpp"

namespace cmpk {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(GeneralizedTrig, QuarterCircle) {
  EXPECT_NEAR(generalized_cos(Curvature(1), kPi / 2), 0, 1e-15);
  EXPECT_NEAR(generalized_sin(Curvature(1), kPi / 2), 1, 1e-15);
}

TEST(GeneralizedTrig, FlatLimit) {
  const double d = 3;
  EXPECT_EQ(generalized_cos(Curvature(0), d), 1);
  EXPECT_EQ(generalized_sin(Curvature(0), d), d);
  EXPECT_DOUBLE_EQ(generalized_versine(Curvature(0), d), d * d / 2);
  // Tiny curvature on either side agrees with the limit to series accuracy.
  for (double k : {1e-12, -1e-12, 1e-10, -1e-10}) {
    EXPECT_NEAR(generalized_sin(Curvature(k), d), d, 1e-9);
    EXPECT_NEAR(generalized_versine(Curvature(k), d), d * d / 2, 1e-9);
  }
}

TEST(GeneralizedTrig, Hyperbolic) {
  EXPECT_NEAR(generalized_cos(Curvature(-1), 1), std::cosh(1.0), 1e-14);
  EXPECT_NEAR(generalized_sin(Curvature(-1), 1), std::sinh(1.0), 1e-14);
  EXPECT_NEAR(generalized_cos(Curvature(-4), 0.7), std::cosh(1.4), 1e-13);
  EXPECT_NEAR(generalized_sin(Curvature(-4), 0.7), std::sinh(1.4) / 2, 1e-13);
}

TEST(GeneralizedTrig, SeriesBranchIsContinuous) {
  // Straddle the series cutoff |k| d^2 = 1e-8 from both sides.
  for (double k : {1.0, -1.0}) {
    const double d_cut = std::sqrt(1e-8);
    const double below = generalized_versine(Curvature(k), d_cut * (1 - 1e-9));
    const double above = generalized_versine(Curvature(k), d_cut * (1 + 1e-9));
    EXPECT_NEAR(below, above, 1e-16);
    const double h = k > 0 ? std::sin(d_cut / 2) : std::sinh(d_cut / 2);
    const double exact = 2 * h * h;
    EXPECT_NEAR(generalized_versine(Curvature(k), d_cut), exact, 1e-20);
  }
}

TEST(GeneralizedTrig, Errors) {
  EXPECT_THROW(Curvature(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(Curvature(std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(generalized_cos(Curvature(1), kPi), DomainError);
  EXPECT_THROW(generalized_sin(Curvature(4), kPi / 2 + 0.1), DomainError);
  EXPECT_THROW(generalized_cos(Curvature(1), -0.1), DomainError);
  EXPECT_THROW(generalized_cos(Curvature(1), std::numeric_limits<double>::quiet_NaN()),
               DomainError);
}

TEST(InverseVersine, RoundTrip) {
  for (double k : {-3.0, -1.0, -1e-9, 0.0, 1e-9, 1.0, 3.0}) {
    for (double d : {1e-6, 0.01, 0.3, 1.0, 1.7}) {
      if (k > 0 && d >= kPi / std::sqrt(k)) continue;
      const double m = generalized_versine(Curvature(k), d);
      EXPECT_NEAR(inverse_generalized_versine(Curvature(k), m), d, 1e-12 * std::max(1.0, d))
          << "k=" << k << " d=" << d;
    }
  }
}

TEST(SideFromAngle, Pythagoras) {
  EXPECT_NEAR(side_from_angle(Curvature(0), 3, 4, kPi / 2), 5, 1e-14);
}

TEST(SideFromAngle, StraightAngleConcatenates) {
  for (double k : {-2.0, 0.0, 0.5, 1.0}) {
    EXPECT_NEAR(side_from_angle(Curvature(k), 0.4, 0.9, kPi), 1.3, 1e-12) << k;
  }
}

TEST(SideFromAngle, QuarterSidesOnUnitSphere) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> g(0, kPi);
  for (int i = 0; i < 50; ++i) {
    const double gamma = g(rng);
    // Brute force: two points on the equator-apart great circles.
    const oracle::Vec3 a = oracle::sphere_point(kPi / 2, 0);
    const oracle::Vec3 b = oracle::sphere_point(kPi / 2, gamma);
    const double c = oracle::sphere_distance(1, a, b);
    EXPECT_NEAR(side_from_angle(Curvature(1), kPi / 2, kPi / 2, gamma), c, 1e-12);
    EXPECT_NEAR(c, gamma, 1e-12);
  }
}

TEST(SideFromAngle, MatchesLawOfCosinesOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> kd(-4, 4), ld(0.05, 0.7), gd(0.01, kPi - 0.01);
  for (int i = 0; i < 2000; ++i) {
    const double k = kd(rng), a = ld(rng), b = ld(rng), g = gd(rng);
    EXPECT_NEAR(side_from_angle(Curvature(k), a, b, g), oracle::model_side(k, a, b, g), 1e-10)
        << k << " " << a << " " << b << " " << g;
  }
}

TEST(SideFromAngle, Errors) {
  EXPECT_THROW(side_from_angle(Curvature(1), kPi, 0.5, 1.0), DomainError);
  EXPECT_THROW(side_from_angle(Curvature(0), 1, 1, 4.0), DomainError);
  EXPECT_THROW(side_from_angle(Curvature(0), -1, 1, 1.0), DomainError);
}

TEST(ComparisonAngle, Examples) {
  EXPECT_NEAR(comparison_angle(Curvature(0), {3, 4, 5}), kPi / 2, 1e-14);
  EXPECT_NEAR(comparison_angle(Curvature(1), {kPi / 2, kPi / 2, kPi / 2}), kPi / 2, 1e-14);
  EXPECT_NEAR(comparison_angle(Curvature(0), {0.3, 0.5, 0.8}), kPi, 1e-7);
  const double c = std::acosh(std::cosh(1.0) * std::cosh(1.0));
  EXPECT_NEAR(comparison_angle(Curvature(-1), {1, 1, c}), kPi / 2, 1e-12);
}

TEST(ComparisonAngle, MatchesOracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> kd(-3, 3), ld(0.05, 0.6), gd(0.05, kPi - 0.05);
  for (int i = 0; i < 2000; ++i) {
    const double k = kd(rng), a = ld(rng), b = ld(rng);
    const double c = oracle::model_side(k, a, b, gd(rng));
    EXPECT_NEAR(comparison_angle(Curvature(k), {a, b, c}), oracle::model_angle(k, a, b, c), 1e-8);
  }
}

TEST(ComparisonAngle, ContinuousAtZero) {
  const SideTriple s{0.7, 1.1, 1.3};
  const double flat = comparison_angle(Curvature(0), s);
  EXPECT_NEAR(comparison_angle(Curvature(1e-8), s), flat, 1e-8);
  EXPECT_NEAR(comparison_angle(Curvature(-1e-8), s), flat, 1e-8);
}

TEST(ComparisonAngle, Errors) {
  EXPECT_THROW(comparison_angle(Curvature(0), {0, 1, 1}), DegenerateError);
  EXPECT_THROW(comparison_angle(Curvature(0), {1, 1, 3}), DomainError);
  // Perimeter beyond 2 pi / sqrt(k).
  EXPECT_THROW(comparison_angle(Curvature(1), {3, 3, 1}), DomainError);
  // Tolerated violation snaps to the degenerate triangle.
  EXPECT_NEAR(comparison_angle(Curvature(0), {1, 1, 2 * (1 + 1e-11)}), kPi, 1e-5);
}

TEST(PythagoreanDefect, Signs) {
  EXPECT_NEAR(pythagorean_defect(Curvature(0), 3, 4, 5), 0, 1e-14);
  // Oracle hypotenuses decide the expected sign.
  EXPECT_LT(oracle::spherical_side(1, 0.3, 0.4, kPi / 2), 0.5);
  EXPECT_GT(pythagorean_defect(Curvature(1), 0.3, 0.4, 0.5), 0);
  EXPECT_GT(oracle::hyperbolic_side(-1, 0.3, 0.4, kPi / 2), 0.5);
  EXPECT_LT(pythagorean_defect(Curvature(-1), 0.3, 0.4, 0.5), 0);
}

TEST(ComparisonDistance, Endpoints) {
  for (double k : {-1.0, 0.0, 1.0}) {
    EXPECT_NEAR(comparison_distance_at(Curvature(k), 0.5, 0.7, 0.6, 0), 0.5, 1e-12);
    EXPECT_NEAR(comparison_distance_at(Curvature(k), 0.5, 0.7, 0.6, 0.6), 0.7, 1e-12);
  }
}

TEST(ComparisonDistance, PlanarRightAngle) {
  // p~ = (0,0), q~ = (0,1), r~ = (1,0); s~ = (0.5, 0).
  EXPECT_NEAR(comparison_distance_at(Curvature(0), 1, std::sqrt(2.0), 1, 0.5), std::sqrt(1.25),
              1e-12);
}

TEST(ComparisonDistance, OctantEquator) {
  const oracle::Vec3 apex = oracle::sphere_point(0, 0);
  const oracle::Vec3 s = oracle::sphere_point(kPi / 2, kPi / 4);
  EXPECT_NEAR(oracle::sphere_distance(1, apex, s), kPi / 2, 1e-15);
  EXPECT_NEAR(comparison_distance_at(Curvature(1), kPi / 2, kPi / 2, kPi / 2, kPi / 4), kPi / 2,
              1e-9);
}

TEST(ComparisonTriangle, AngleSumSignFollowsK) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ld(0.1, 0.8);
  for (double k : {-2.0, -0.5, 0.5, 2.0}) {
    for (int i = 0; i < 100; ++i) {
      const double a = ld(rng), b = ld(rng);
      const double c = oracle::model_side(k, a, b, 1.0 + 0.5 * ld(rng));
      const auto t = make_comparison_triangle(Curvature(k), {a, b, c});
      EXPECT_EQ(std::signbit(t.angle_sum() - kPi), std::signbit(k));
      for (double ang : t.angles) {
        EXPECT_GE(ang, 0);
        EXPECT_LE(ang, kPi);
      }
    }
  }
  const auto flat = make_comparison_triangle(Curvature(0), {3, 4, 5});
  EXPECT_NEAR(flat.angle_sum(), kPi, 1e-14);
  EXPECT_NEAR(flat.angles[2], kPi / 2, 1e-14);
}

TEST(ComparisonAngle, MonotoneInK) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ld(0.05, 0.5), gd(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double a = ld(rng), b = ld(rng);
    const SideTriple s{a, b, oracle::planar_side(a, b, gd(rng))};
    double prev = -1;
    for (double k = -4; k <= 4; k += 0.5) {
      const double ang = comparison_angle(Curvature(k), s);
      EXPECT_GE(ang, prev - 1e-12);
      prev = ang;
    }
  }
}

}  // namespace
}  // namespace cmpk
