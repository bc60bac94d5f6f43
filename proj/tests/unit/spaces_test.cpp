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
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include "cmpk/descriptor.hpp"
#include "cmpk/errors.hpp"
#include "cmpk/geodesic_space.hpp"
#include "oracles.hpp"

namespace cmpk {
namespace {

constexpr double kPi = std::numbers::pi;

Point at(const GeodesicSpace& s, std::vector<double> c) { return s.point_from_coords(c); }

TEST(Plane, Distance) {
  auto plane = make_euclidean_plane();
  EXPECT_DOUBLE_EQ(plane->distance(at(*plane, {0, 0}), at(*plane, {3, 4})), 5);
  EXPECT_EQ(plane->known_curvature(), 0.0);
}

TEST(Sphere, PoleToEquator) {
  for (double k : {1.0, 4.0, 0.25}) {
    auto s = make_sphere(k);
    const double d = s->distance(at(*s, {0, 0}), at(*s, {kPi / 2, 1.2}));
    EXPECT_NEAR(d, kPi / 2 / std::sqrt(k), 1e-14);
  }
}

TEST(Sphere, MatchesAcosOracle) {
  auto s = make_sphere(2);
  Rng rng(1);
  const Point c = s->default_center();
  for (int i = 0; i < 500; ++i) {
    const Point a = s->sample_ball(c, 1.5, rng);
    const Point b = s->sample_ball(c, 1.5, rng);
    EXPECT_NEAR(s->distance(a, b), oracle::sphere_distance(2, a.x, b.x), 1e-7);
  }
}

TEST(Hyperbolic, OrthogonalUnitGeodesics) {
  auto h = make_hyperbolic(-1);
  const Point o = h->default_center();
  const Point q = *h->shoot(o, 0, 1);
  const Point r = *h->shoot(o, kPi / 2, 1);
  EXPECT_NEAR(h->distance(o, q), 1, 1e-12);
  EXPECT_NEAR(h->distance(q, r), std::acosh(std::cosh(1.0) * std::cosh(1.0)), 1e-12);
  EXPECT_NEAR(h->distance(q, r), oracle::hyperbolic_distance(-1, q.x, r.x), 1e-12);
}

TEST(Hyperbolic, ScaledCurvature) {
  auto h = make_hyperbolic(-4);
  const Point o = h->default_center();
  const Point q = *h->shoot(o, 0.3, 0.8);
  const Point r = *h->shoot(o, 0.3 + kPi / 3, 0.5);
  EXPECT_NEAR(h->distance(o, q), 0.8, 1e-12);
  EXPECT_NEAR(h->distance(q, r), oracle::hyperbolic_side(-4, 0.8, 0.5, kPi / 3), 1e-11);
}

TEST(Cone, SameRay) {
  auto c = make_cone(kPi);
  EXPECT_NEAR(c->distance(at(*c, {1, 0.4}), at(*c, {2, 0.4})), 1, 1e-15);
}

TEST(Cone, MatchesUnrolledOracle) {
  for (double L : {kPi, 1.0, 4.0, 2 * kPi}) {
    auto c = make_cone(L);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> rd(0, 2), td(0, L);
    for (int i = 0; i < 500; ++i) {
      const double r1 = rd(rng), t1 = td(rng), r2 = rd(rng), t2 = td(rng);
      EXPECT_NEAR(c->distance(at(*c, {r1, t1}), at(*c, {r2, t2})),
                  oracle::cone_distance(L, r1, t1, r2, t2), 1e-12)
          << "L=" << L;
    }
  }
  auto c = make_cone(kPi);
  EXPECT_NEAR(c->distance(at(*c, {1, 0}), at(*c, {1, kPi / 2})), std::sqrt(2.0), 1e-14);
}

TEST(Cone, TieLocusHasTwoGeodesics) {
  auto c = make_cone(kPi);
  const auto geos = c->minimal_geodesics(at(*c, {1, 0}), at(*c, {1, kPi / 2}));
  ASSERT_EQ(geos.size(), 2u);
  const double mid_gap = c->distance(geos[0].at(geos[0].length() / 2),
                                     geos[1].at(geos[1].length() / 2));
  EXPECT_GT(mid_gap, 0.1);
  for (const auto& g : geos) EXPECT_NEAR(g.length(), std::sqrt(2.0), 1e-12);
  // Away from the locus there is one.
  EXPECT_EQ(c->minimal_geodesics(at(*c, {1, 0}), at(*c, {1, 0.5})).size(), 1u);
}

TEST(Tripod, Distances) {
  auto t = make_tripod();
  EXPECT_DOUBLE_EQ(t->distance(at(*t, {0, 2}), at(*t, {0, 5})), 3);
  EXPECT_DOUBLE_EQ(t->distance(at(*t, {0, 2}), at(*t, {1, 3})), 5);
  const auto g = t->minimal_geodesics(at(*t, {0, 1}), at(*t, {1, 1}));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(t->same_point(g[0].at(1), t->default_center()));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> ray(0, 2);
  std::uniform_real_distribution<double> rd(0, 3);
  for (int i = 0; i < 200; ++i) {
    const int a = ray(rng), b = ray(rng);
    const double ra = rd(rng), rb = rd(rng);
    EXPECT_DOUBLE_EQ(t->distance(at(*t, {double(a), ra}), at(*t, {double(b), rb})),
                     oracle::tripod_distance(a, ra, b, rb));
  }
}

std::array<std::array<double, 3>, 3> octant() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

TEST(SphericalTriangle, OctantMidpoints) {
  auto d = make_spherical_triangle_domain(1, octant());
  const double h = 1 / std::sqrt(2.0);
  const Point m01 = at(*d, {h, h, 0});
  const Point m12 = at(*d, {0, h, h});
  EXPECT_NEAR(d->distance(m01, m12), kPi / 3, 1e-14);
}

TEST(SphericalTriangle, InteriorDistancesAreAmbient) {
  auto d = make_spherical_triangle_domain(1, octant());
  auto s = make_sphere(1);
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const Point a = d->sample_ball(d->default_center(), 0.6, rng);
    const Point b = d->sample_ball(d->default_center(), 0.6, rng);
    EXPECT_TRUE(d->contains(a));
    EXPECT_NEAR(d->distance(a, b), s->distance(a, b), 1e-15);
    EXPECT_NEAR(d->distance(a, b), oracle::sphere_distance(1, a.x, b.x), 1e-7);
  }
}

TEST(SphericalTriangle, SamplingAtAVertexStaysInside) {
  auto d = make_spherical_triangle_domain(1, octant());
  const Point v = at(*d, {1, 0, 0});
  Rng rng(9);
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(d->contains(d->sample_ball(v, 0.3, rng)));
  EXPECT_FALSE(d->contains(at(*d, {-1, 0.2, 0.2})));
  EXPECT_FALSE(d->shoot(v, kPi, 0.3).has_value() && !d->contains(*d->shoot(v, kPi, 0.3)));
}

TEST(SphericalTriangle, RejectsCollinearVertices) {
  EXPECT_THROW(make_spherical_triangle_domain(1, {{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}}), SpaceError);
}

struct SpaceCase {
  const char* name;
  SpacePtr space;
  double radius;
};

std::vector<SpaceCase> analytic_spaces() {
  return {{"plane", make_euclidean_plane(), 1.0},
          {"sphere", make_sphere(1), 1.0},
          {"hyperbolic", make_hyperbolic(-1), 1.0},
          {"cone", make_cone(kPi), 1.0},
          {"tripod", make_tripod(), 1.0},
          {"octant", make_spherical_triangle_domain(1, octant()), 0.6}};
}

TEST(AllSpaces, MetricAxioms) {
  for (const auto& c : analytic_spaces()) {
    const auto& s = *c.space;
    Rng rng(17);
    const Point o = s.default_center();
    const double tol = s.tolerances().geodesic;
    for (int i = 0; i < 10000; ++i) {
      const Point a = s.sample_ball(o, c.radius, rng);
      const Point b = s.sample_ball(o, c.radius, rng);
      const Point p = s.sample_ball(o, c.radius, rng);
      const double ab = s.distance(a, b);
      ASSERT_NEAR(ab, s.distance(b, a), 1e-12) << c.name;
      ASSERT_LE(s.distance(a, a), s.tolerances().point) << c.name;
      ASSERT_LE(ab, s.distance(a, p) + s.distance(p, b) + tol) << c.name;
    }
  }
}

TEST(AllSpaces, SegmentsAreMinimal) {
  for (const auto& c : analytic_spaces()) {
    const auto& s = *c.space;
    Rng rng(23);
    std::uniform_real_distribution<double> u(0, 1);
    const Point o = s.default_center();
    for (int i = 0; i < 300; ++i) {
      const Point a = s.sample_ball(o, c.radius, rng);
      const Point b = s.sample_ball(o, c.radius, rng);
      for (const auto& g : s.minimal_geodesics(a, b)) {
        ASSERT_NEAR(g.length(), s.distance(a, b), s.tolerances().tie) << c.name;
        ASSERT_LE(s.distance(g.at(0), a), 1e-9) << c.name;
        ASSERT_LE(s.distance(g.at(g.length()), b), 1e-9) << c.name;
        double t0 = u(rng) * g.length(), t1 = u(rng) * g.length();
        if (t0 > t1) std::swap(t0, t1);
        ASSERT_NEAR(s.distance(g.at(t0), g.at(t1)), t1 - t0, 1e-9) << c.name;
        const auto sl = g.slice(t0, t1);
        ASSERT_NEAR(sl.length(), t1 - t0, 1e-15);
        ASSERT_LE(s.distance(sl.at(0), g.at(t0)), 1e-12);
      }
    }
  }
}

TEST(AllSpaces, SampleBallRespectsRadius) {
  for (const auto& c : analytic_spaces()) {
    Rng rng(29);
    const Point o = c.space->default_center();
    for (int i = 0; i < 1000; ++i) {
      ASSERT_LE(c.space->distance(o, c.space->sample_ball(o, 0.3, rng)), 0.3 + 1e-12) << c.name;
    }
  }
}

TEST(AllSpaces, DescriptorRoundTrip) {
  for (const auto& c : analytic_spaces()) {
    auto again = space_from_descriptor(c.space->descriptor());
    EXPECT_EQ(again->id(), c.space->id());
    EXPECT_EQ(again->descriptor(), c.space->descriptor());
  }
}

TEST(Descriptor, Errors) {
  EXPECT_THROW(space_from_descriptor(R"({"type":"sphere","k":-1})"), SpaceError);
  EXPECT_THROW(space_from_descriptor(R"({"type":"hyperbolic","k":1})"), SpaceError);
  EXPECT_THROW(space_from_descriptor(R"({"type":"plane","extra":1})"), SpaceError);
  EXPECT_THROW(space_from_descriptor(R"({"k":1})"), SpaceError);
  EXPECT_THROW(space_from_descriptor(R"({"type":"klein_bottle"})"), SpaceError);
  EXPECT_THROW(space_from_descriptor(R"({"type":"cone","perimeter":0})"), SpaceError);
  EXPECT_THROW(space_from_descriptor("not json"), SpaceError);
  EXPECT_THROW(space_from_descriptor(R"({"type":"plane","schema":2})"), SpaceError);
}

TEST(Descriptor, LoadFromFileOrInline) {
  EXPECT_EQ(load_space(R"(  {"type":"sphere","k":1,"schema":1})")->id(), make_sphere(1)->id());
  const std::string path = ::testing::TempDir() + "cmpk_desc.json";
  std::ofstream(path) << R"({"type":"cone","perimeter":3})";
  EXPECT_EQ(load_space(path)->id(), make_cone(3)->id());
  EXPECT_THROW(load_space("/nonexistent/dir/space.json"), IoError);
}

TEST(Constructors, RejectOutOfRangeCurvature) {
  EXPECT_THROW(make_sphere(0), SpaceError);
  EXPECT_THROW(make_sphere(1e7), SpaceError);
  EXPECT_THROW(make_hyperbolic(-1e-7), SpaceError);
  EXPECT_THROW(make_cone(-1), SpaceError);
}

}  // namespace
}  // namespace cmpk
