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
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cmpk/errors.hpp"
#include "cmpk/geodesic_space.hpp"
#include "vec3.hpp"

namespace cmpk {
namespace {

constexpr double kPi = std::numbers::pi;

// Euclidean cone over a circle of perimeter L. Points are (r, theta) in
// x[0], x[1] with theta in [0, L); the apex is r = 0, theta = 0.
class Cone final : public GeodesicSpace {
 public:
  explicit Cone(double perimeter) : perimeter_(perimeter) {
    if (!std::isfinite(perimeter) || perimeter <= 0) {
      throw SpaceError("cone perimeter must be > 0");
    }
  }

  std::string id() const override {
    std::ostringstream os;
    os << "cone(L=" << perimeter_ << ")";
    return os.str();
  }
  std::string descriptor() const override {
    return nlohmann::json{{"type", "cone"}, {"perimeter", perimeter_}}.dump();
  }

  double distance(const Point& a, const Point& b) const override {
    const double fwd = forward_offset(a, b);
    return chord(a.x[0], b.x[0], std::min(fwd, perimeter_ - fwd));
  }

  std::vector<GeodesicSegment> minimal_geodesics(const Point& a,
                                                 const Point& b) const override {
    const double ra = a.x[0];
    const double rb = b.x[0];
    const double tol_pt = tolerances().point;
    if (ra <= tol_pt || rb <= tol_pt) return {through_apex(a, b)};
    const double fwd = forward_offset(a, b);
    const double bwd = perimeter_ - fwd;
    const double len_f = chord(ra, rb, fwd);
    const double len_b = chord(ra, rb, bwd);
    const double best = std::min(len_f, len_b);
    const double tie = tolerances().tie;

    std::vector<GeodesicSegment> out;
    if (len_f <= best + tie) out.push_back(path(a, b, fwd));
    if (len_b <= best + tie) {
      // Two sweeps of pi or more both run through the apex: one path.
      if (out.empty() || fwd < kPi || bwd < kPi) out.push_back(path(a, b, -bwd));
    }
    if (out.size() == 2 && out[0].length() > out[1].length()) std::swap(out[0], out[1]);
    return out;
  }

  Point sample_ball(const Point& center, double radius, Rng& rng) const override {
    std::uniform_real_distribution<double> heading(0, 2 * kPi);
    std::uniform_real_distribution<double> rho(0, radius);
    for (;;) {
      const double h = heading(rng);
      const double len = rho(rng);
      if (auto p = shoot(center, h, len)) return *p;
    }
  }

  // Heading 0 points away from the apex, pi/2 toward increasing theta. At the
  // apex the heading in [0, 2 pi) is scaled onto the circle of directions.
  std::optional<Point> shoot(const Point& p, double heading, double length) const override {
    const double r0 = p.x[0];
    if (r0 <= tolerances().point) {
      return make(length, detail::wrap_angle(heading, 2 * kPi) / (2 * kPi) * perimeter_);
    }
    const double ux = std::cos(heading);
    const double uy = std::sin(heading);
    const double closest = -r0 * ux;
    if (closest > 0 && closest < length && r0 * std::abs(uy) <= tolerances().point) {
      return std::nullopt;  // runs into the apex
    }
    const double px = r0 + length * ux;
    const double py = length * uy;
    return make(std::hypot(px, py), p.x[1] + std::atan2(py, px));
  }

  std::optional<double> known_curvature() const override {
    return std::abs(perimeter_ - 2 * kPi) < 1e-12 ? std::optional<double>(0.0) : std::nullopt;
  }

  std::vector<double> coords(const Point& p) const override { return {p.x[0], p.x[1]}; }
  Point point_from_coords(std::span<const double> c) const override {
    if (c.size() != 2 || !(c[0] >= 0)) {
      throw SpaceError("cone points take 2 coordinates (r >= 0, theta)");
    }
    return make(c[0], c[1]);
  }
  Point default_center() const override { return make(0, 0); }

  double perimeter() const { return perimeter_; }

 private:
  Point make(double r, double theta) const { return make_at(r, theta, perimeter_); }

  static Point make_at(double r, double theta, double perimeter) {
    Point p;
    if (r <= 0) {
      p.x = {0, 0, 0};
    } else {
      p.x = {r, detail::wrap_angle(theta, perimeter), 0};
    }
    return p;
  }

  double forward_offset(const Point& a, const Point& b) const {
    return detail::wrap_angle(b.x[1] - a.x[1], perimeter_);
  }

  static double chord(double ra, double rb, double sweep) {
    if (sweep >= kPi) return ra + rb;
    const double h = std::sin(sweep / 2);
    return std::sqrt((ra - rb) * (ra - rb) + 4 * ra * rb * h * h);
  }

  GeodesicSegment through_apex(const Point& a, const Point& b) const {
    const double ra = a.x[0];
    const double ta = a.x[1];
    const double tb = b.x[1];
    const double len = ra + b.x[0];
    const double L = perimeter_;
    return GeodesicSegment(id(), a, b, len, [L, ra, ta, tb](double t) {
      return t <= ra ? make_at(ra - t, ta, L) : make_at(t - ra, tb, L);
    });
  }

  // Straight segment in the development with signed angular sweep.
  GeodesicSegment path(const Point& a, const Point& b, double sweep) const {
    if (std::abs(sweep) >= kPi) return through_apex(a, b);
    const double ra = a.x[0];
    const double ta = a.x[1];
    const double bx = b.x[0] * std::cos(sweep);
    const double by = b.x[0] * std::sin(sweep);
    const double len = std::hypot(bx - ra, by);
    const double ux = len > 0 ? (bx - ra) / len : 0;
    const double uy = len > 0 ? by / len : 0;
    const double L = perimeter_;
    return GeodesicSegment(id(), a, b, chord(ra, b.x[0], std::abs(sweep)),
                           [L, ra, ta, ux, uy](double t) {
                             const double px = ra + t * ux;
                             const double py = t * uy;
                             return make_at(std::hypot(px, py), ta + std::atan2(py, px), L);
                           });
  }

  double perimeter_;
};

}  // namespace

SpacePtr make_cone(double perimeter) { return std::make_shared<Cone>(perimeter); }

}  // namespace cmpk
