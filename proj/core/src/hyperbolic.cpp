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
#include <sstream>

#include <json.hpp>

#include "cmpk/errors.hpp"
#include "cmpk/geodesic_space.hpp"
#include "vec3.hpp"

namespace cmpk {
namespace {

using namespace detail;

// Re-projects onto the upper sheet x0 = sqrt(1 + x1^2 + x2^2).
Point on_sheet(const Vec3& v) {
  Point p;
  p.x = {std::sqrt(1 + v[1] * v[1] + v[2] * v[2]), v[1], v[2]};
  return p;
}

Vec3 tangent_part(const Vec3& v, const Vec3& u) {
  return v + mdot(v, u) * u;  // <u,u> = -1
}

Vec3 unit_spacelike(const Vec3& v) { return (1 / std::sqrt(mdot(v, v))) * v; }

// Hyperboloid model {-x0^2 + x1^2 + x2^2 = -1, x0 > 0}; lengths carry the
// scale 1/sqrt(-k).
class HyperbolicPlane final : public GeodesicSpace {
 public:
  explicit HyperbolicPlane(double k) : k_(k) {
    if (!std::isfinite(k) || k >= 0) throw SpaceError("hyperbolic plane needs k < 0");
    if (-k < 1e-6 || -k > 1e6) throw SpaceError("hyperbolic curvature outside [-1e6, -1e-6]");
    scale_ = 1 / std::sqrt(-k);
  }

  std::string id() const override {
    std::ostringstream os;
    os << "hyperbolic(k=" << k_ << ")";
    return os.str();
  }
  std::string descriptor() const override {
    return nlohmann::json{{"type", "hyperbolic"}, {"k", k_}}.dump();
  }

  double distance(const Point& a, const Point& b) const override {
    const Vec3 d = a.x - b.x;
    const double chord = std::sqrt(std::max(0.0, mdot(d, d)));
    return 2 * scale_ * std::asinh(chord / 2);
  }

  std::vector<GeodesicSegment> minimal_geodesics(const Point& a,
                                                 const Point& b) const override {
    const double len = distance(a, b);
    Vec3 w = frame(a.x)[0];
    if (len > tolerances().point) w = unit_spacelike(tangent_part(b.x - a.x, a.x));
    return {line(a, w, len, b)};
  }

  Point sample_ball(const Point& center, double radius, Rng& rng) const override {
    std::uniform_real_distribution<double> heading(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> rho(0, radius);
    const double h = heading(rng);
    return *shoot(center, h, rho(rng));
  }

  std::optional<Point> shoot(const Point& p, double heading, double length) const override {
    const auto f = frame(p.x);
    const Vec3 dir = std::cos(heading) * f[0] + std::sin(heading) * f[1];
    return on_sheet(std::cosh(length / scale_) * p.x + std::sinh(length / scale_) * dir);
  }

  std::optional<double> known_curvature() const override { return k_; }

  std::vector<double> coords(const Point& p) const override { return {p.x[0], p.x[1], p.x[2]}; }

  // Two coordinates are (x1, x2); three are a hyperboloid point.
  Point point_from_coords(std::span<const double> c) const override {
    if (c.size() == 2) return on_sheet({0, c[0], c[1]});
    if (c.size() == 3) {
      if (!(c[0] > 0)) throw SpaceError("hyperboloid point needs x0 > 0");
      return on_sheet({c[0], c[1], c[2]});
    }
    throw SpaceError("hyperbolic points take 2 (x1, x2) or 3 coordinates");
  }

  Point default_center() const override { return on_sheet({1, 0, 0}); }

 private:
  static std::array<Vec3, 2> frame(const Vec3& u) {
    const Vec3 e1 = unit_spacelike(tangent_part({0, 1, 0}, u));
    Vec3 v = tangent_part({0, 0, 1}, u);
    v = v - mdot(v, e1) * e1;
    return {e1, unit_spacelike(v)};
  }

  GeodesicSegment line(const Point& a, const Vec3& w, double length, const Point& b) const {
    const Vec3 u = a.x;
    const double s = scale_;
    return GeodesicSegment(id(), a, b, length, [u, w, s](double t) {
      return on_sheet(std::cosh(t / s) * u + std::sinh(t / s) * w);
    });
  }

  double k_;
  double scale_ = 1;
};

}  // namespace

SpacePtr make_hyperbolic(double k) { return std::make_shared<HyperbolicPlane>(k); }

}  // namespace cmpk
