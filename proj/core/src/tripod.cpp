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

#include <numbers>

#include <json.hpp>

#include "cmpk/errors.hpp"
#include "cmpk/geodesic_space.hpp"
#include "vec3.hpp"

namespace cmpk {
namespace {

constexpr double kPi = std::numbers::pi;

Point tip(int ray, double r) {
  Point p;
  if (r > 0) {
    p.label = ray;
    p.x[0] = r;
  }
  return p;
}

// Three rays glued at the origin. Points are (ray, r) in (label, x[0]); the
// branch point is r = 0 with label 0.
class Tripod final : public GeodesicSpace {
 public:
  std::string id() const override { return "tripod"; }
  std::string descriptor() const override {
    return nlohmann::json{{"type", "tripod"}}.dump();
  }

  double distance(const Point& a, const Point& b) const override {
    if (a.label == b.label || a.x[0] == 0 || b.x[0] == 0) return std::abs(a.x[0] - b.x[0]);
    return a.x[0] + b.x[0];
  }

  std::vector<GeodesicSegment> minimal_geodesics(const Point& a,
                                                 const Point& b) const override {
    const double ra = a.x[0];
    const double rb = b.x[0];
    const int la = a.label;
    const int lb = b.label;
    if (la == lb || ra == 0 || rb == 0) {
      const int ray = ra == 0 ? lb : la;
      return {GeodesicSegment(id(), a, b, std::abs(ra - rb), [ray, ra, rb](double t) {
        return tip(ray, ra + (rb >= ra ? t : -t));
      })};
    }
    return {GeodesicSegment(id(), a, b, ra + rb, [la, lb, ra](double t) {
      return t <= ra ? tip(la, ra - t) : tip(lb, t - ra);
    })};
  }

  Point sample_ball(const Point& center, double radius, Rng& rng) const override {
    std::uniform_real_distribution<double> rho(0, radius);
    std::uniform_int_distribution<int> pick(0, 2);
    std::bernoulli_distribution coin(0.5);
    const double len = rho(rng);
    const double r = center.x[0];
    if (r == 0) return tip(pick(rng), len);
    const bool outward = coin(rng);
    if (outward) return tip(center.label, r + len);
    if (len <= r) return tip(center.label, r - len);
    const int other = (center.label + 1 + (coin(rng) ? 1 : 0)) % 3;
    return tip(other, len - r);
  }

  // Headings collapse onto the finitely many directions: at the branch point
  // [0, 2 pi) splits into three ray sectors; elsewhere cos(heading) >= 0 is
  // outward and inward paths crossing the branch continue on the ray picked
  // by the sign of sin(heading).
  std::optional<Point> shoot(const Point& p, double heading, double length) const override {
    const double r = p.x[0];
    if (r == 0) {
      const int ray = static_cast<int>(detail::wrap_angle(heading, 2 * kPi) / (2 * kPi / 3)) % 3;
      return tip(ray, length);
    }
    if (std::cos(heading) >= 0) return tip(p.label, r + length);
    if (length <= r) return tip(p.label, r - length);
    const int other = (p.label + (std::sin(heading) >= 0 ? 1 : 2)) % 3;
    return tip(other, length - r);
  }

  std::vector<double> coords(const Point& p) const override {
    return {static_cast<double>(p.label), p.x[0]};
  }
  Point point_from_coords(std::span<const double> c) const override {
    if (c.size() != 2 || !(c[1] >= 0) || (c[0] != 0 && c[0] != 1 && c[0] != 2)) {
      throw SpaceError("tripod points take 2 coordinates (ray in {0,1,2}, r >= 0)");
    }
    return tip(static_cast<int>(c[0]), c[1]);
  }
  Point default_center() const override { return Point{}; }
};

}  // namespace

SpacePtr make_tripod() { return std::make_shared<Tripod>(); }

}  // namespace cmpk
