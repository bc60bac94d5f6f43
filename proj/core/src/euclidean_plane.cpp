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

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "cmpk/errors.hpp"
#include "cmpk/geodesic_space.hpp"

namespace cmpk {
namespace {

// Points are (x, y) in x[0], x[1].
class EuclideanPlane final : public GeodesicSpace {
 public:
  std::string id() const override { return "plane"; }
  std::string descriptor() const override {
    return nlohmann::json{{"type", "plane"}}.dump();
  }

  double distance(const Point& a, const Point& b) const override {
    return std::hypot(a.x[0] - b.x[0], a.x[1] - b.x[1]);
  }

  std::vector<GeodesicSegment> minimal_geodesics(const Point& a,
                                                 const Point& b) const override {
    const double len = distance(a, b);
    const double ux = len > 0 ? (b.x[0] - a.x[0]) / len : 0;
    const double uy = len > 0 ? (b.x[1] - a.x[1]) / len : 0;
    return {GeodesicSegment(id(), a, b, len, [a, ux, uy](double t) {
      Point p;
      p.x = {a.x[0] + t * ux, a.x[1] + t * uy, 0};
      return p;
    })};
  }

  Point sample_ball(const Point& center, double radius, Rng& rng) const override {
    std::uniform_real_distribution<double> heading(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> rho(0, radius);
    const double h = heading(rng);
    return *shoot(center, h, rho(rng));
  }

  std::optional<Point> shoot(const Point& p, double heading, double length) const override {
    Point q;
    q.x = {p.x[0] + length * std::cos(heading), p.x[1] + length * std::sin(heading), 0};
    return q;
  }

  std::optional<double> known_curvature() const override { return 0.0; }

  std::vector<double> coords(const Point& p) const override { return {p.x[0], p.x[1]}; }
  Point point_from_coords(std::span<const double> c) const override {
    if (c.size() != 2) throw SpaceError("plane points take 2 coordinates (x, y)");
    Point p;
    p.x = {c[0], c[1], 0};
    return p;
  }
  Point default_center() const override { return Point{}; }
};

}  // namespace

SpacePtr make_euclidean_plane() { return std::make_shared<EuclideanPlane>(); }

}  // namespace cmpk
