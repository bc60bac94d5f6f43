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

#include "cmpk/geodesic_space.hpp"
#include "vec3.hpp"

namespace cmpk::detail {

// Round sphere of curvature k. Points are unit vectors of R^3 in x; lengths
// carry the radius 1/sqrt(k).
class SphereSpace : public GeodesicSpace {
 public:
  explicit SphereSpace(double k);

  std::string id() const override;
  std::string descriptor() const override;
  double distance(const Point& a, const Point& b) const override;
  std::vector<GeodesicSegment> minimal_geodesics(const Point& a,
                                                 const Point& b) const override;
  Point sample_ball(const Point& center, double radius, Rng& rng) const override;
  std::optional<Point> shoot(const Point& p, double heading, double length) const override;
  std::optional<double> known_curvature() const override { return k_; }
  std::vector<double> coords(const Point& p) const override;
  Point point_from_coords(std::span<const double> c) const override;
  Point default_center() const override;

  double radius() const { return radius_; }
  double curvature() const { return k_; }

  // Orthonormal tangent frame at u; heading 0 is the first vector.
  static std::array<Vec3, 2> frame(const Vec3& u);

 protected:
  GeodesicSegment great_circle(const Point& a, const Vec3& tangent, double length,
                               const Point& b) const;

 private:
  double k_;
  double radius_;
};

}  // namespace cmpk::detail
