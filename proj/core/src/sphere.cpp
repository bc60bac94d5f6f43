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

#include "sphere_space.hpp"

#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cmpk/errors.hpp"

namespace cmpk {
namespace detail {
namespace {

Point make_point(const Vec3& v) {
  Point p;
  p.x = normalized(v);
  return p;
}

}  // namespace

SphereSpace::SphereSpace(double k) : k_(k), radius_(0) {
  if (!std::isfinite(k) || k <= 0) throw SpaceError("sphere needs k > 0");
  if (k < 1e-6 || k > 1e6) throw SpaceError("sphere curvature outside [1e-6, 1e6]");
  radius_ = 1 / std::sqrt(k);
}

std::string SphereSpace::id() const {
  std::ostringstream os;
  os << "sphere(k=" << k_ << ")";
  return os.str();
}

std::string SphereSpace::descriptor() const {
  return nlohmann::json{{"type", "sphere"}, {"k", k_}}.dump();
}

double SphereSpace::distance(const Point& a, const Point& b) const {
  return radius_ * std::atan2(norm(cross(a.x, b.x)), dot(a.x, b.x));
}

std::array<Vec3, 2> SphereSpace::frame(const Vec3& u) {
  const Vec3 axis = std::abs(u[2]) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  const Vec3 e1 = normalized(cross(axis, u));
  const Vec3 e2 = cross(u, e1);
  return {e1, e2};
}

GeodesicSegment SphereSpace::great_circle(const Point& a, const Vec3& tangent,
                                          double length, const Point& b) const {
  const Vec3 u = a.x;
  const double r = radius_;
  return GeodesicSegment(id(), a, b, length, [u, tangent, r](double t) {
    return make_point(std::cos(t / r) * u + std::sin(t / r) * tangent);
  });
}

std::vector<GeodesicSegment> SphereSpace::minimal_geodesics(const Point& a,
                                                            const Point& b) const {
  const double len = distance(a, b);
  const double tie = tolerances().tie;
  if (len <= tolerances().point) {
    return {great_circle(a, frame(a.x)[0], 0, a)};
  }
  if (std::numbers::pi * radius_ - len <= tie) {
    // Antipodal: a whole family; report two representatives.
    const auto f = frame(a.x);
    return {great_circle(a, f[0], len, b), great_circle(a, f[1], len, b)};
  }
  // Tangent from the small difference vector keeps precision for short arcs.
  const Vec3 d = b.x - a.x;
  const Vec3 w = normalized(d - dot(d, a.x) * a.x);
  return {great_circle(a, w, len, b)};
}

std::optional<Point> SphereSpace::shoot(const Point& p, double heading, double length) const {
  const auto f = frame(p.x);
  const Vec3 dir = std::cos(heading) * f[0] + std::sin(heading) * f[1];
  return make_point(std::cos(length / radius_) * p.x + std::sin(length / radius_) * dir);
}

Point SphereSpace::sample_ball(const Point& center, double radius, Rng& rng) const {
  std::uniform_real_distribution<double> heading(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> rho(0, std::min(radius, std::numbers::pi * radius_));
  const double h = heading(rng);
  return *shoot(center, h, rho(rng));
}

std::vector<double> SphereSpace::coords(const Point& p) const {
  return {p.x[0], p.x[1], p.x[2]};
}

// Two coordinates are (colatitude, longitude) in radians, three a vector.
Point SphereSpace::point_from_coords(std::span<const double> c) const {
  if (c.size() == 2) {
    return make_point({std::sin(c[0]) * std::cos(c[1]), std::sin(c[0]) * std::sin(c[1]),
                       std::cos(c[0])});
  }
  if (c.size() == 3) {
    const Vec3 v{c[0], c[1], c[2]};
    if (!(norm(v) > 0)) throw SpaceError("sphere point needs a nonzero vector");
    return make_point(v);
  }
  throw SpaceError("sphere points take 2 (colatitude, longitude) or 3 coordinates");
}

Point SphereSpace::default_center() const { return make_point({0, 0, 1}); }

}  // namespace detail

SpacePtr make_sphere(double k) { return std::make_shared<detail::SphereSpace>(k); }

}  // namespace cmpk
