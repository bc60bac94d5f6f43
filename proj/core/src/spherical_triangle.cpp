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

#include <sstream>

#include <json.hpp>

#include "cmpk/errors.hpp"
#include "sphere_space.hpp"

namespace cmpk {
namespace {

using namespace detail;

// The spherical convex hull of three vertices in an open hemisphere. It is
// convex, so distances and geodesics are the ambient sphere's.
class SphericalTriangleDomain final : public detail::SphereSpace {
 public:
  SphericalTriangleDomain(double k, const std::array<Vec3, 3>& vertices)
      : SphereSpace(k) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!(detail::norm(vertices[i]) > 0)) throw SpaceError("vertex must be a nonzero vector");
      v_[i] = detail::normalized(vertices[i]);
    }
    const double det = detail::det3(v_[0], v_[1], v_[2]);
    // Independent vertices always lie in an open hemisphere; dependent ones
    // lie on one great circle and bound no proper region.
    if (std::abs(det) < 1e-12) {
      throw SpaceError("vertices are not contained in an open hemisphere");
    }
    // Rows of the inverse of [v0 v1 v2] as columns give barycentric weights.
    dual_[0] = (1 / det) * detail::cross(v_[1], v_[2]);
    dual_[1] = (1 / det) * detail::cross(v_[2], v_[0]);
    dual_[2] = (1 / det) * detail::cross(v_[0], v_[1]);
  }

  std::string id() const override {
    std::ostringstream os;
    os << "spherical_triangle(k=" << curvature() << ")";
    return os.str();
  }

  std::string descriptor() const override {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : v_) verts.push_back({v[0], v[1], v[2]});
    return nlohmann::json{{"type", "spherical_triangle"}, {"k", curvature()}, {"vertices", verts}}
        .dump();
  }

  bool contains(const Point& p) const override {
    const double slack = tolerances().point;
    for (const auto& d : dual_) {
      if (detail::dot(d, p.x) < -slack) return false;
    }
    return true;
  }

  Point sample_ball(const Point& center, double radius, Rng& rng) const override {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Point p = SphereSpace::sample_ball(center, radius, rng);
      if (contains(p)) return p;
    }
    throw SpaceError("ball around the center does not meet the triangle domain");
  }

  std::optional<Point> shoot(const Point& p, double heading, double length) const override {
    auto q = SphereSpace::shoot(p, heading, length);
    if (!q || !contains(*q)) return std::nullopt;
    return q;
  }

  Point default_center() const override {
    Point p;
    p.x = detail::normalized(v_[0] + v_[1] + v_[2]);
    return p;
  }

  Point vertex(int i) const {
    Point p;
    p.x = v_[i];
    return p;
  }

 private:
  std::array<Vec3, 3> v_{};
  std::array<Vec3, 3> dual_{};
};

}  // namespace

SpacePtr make_spherical_triangle_domain(double k,
                                        const std::array<std::array<double, 3>, 3>& vertices) {
  return std::make_shared<SphericalTriangleDomain>(k, vertices);
}

}  // namespace cmpk
