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

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cmpk/tolerances.hpp"

namespace cmpk {

using Rng = std::mt19937_64;

// Deterministic generator for the index-th draw of a batch. Batches split by
// index give the same draws for any worker count.
Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Space-specific coordinates. Each space documents what `x` and `label` mean;
// callers treat points as opaque and compare them through the owning space.
struct Point {
  std::array<double, 3> x{};
  int label = 0;
};

// Arclength-parametrized minimal geodesic from start() to end().
class GeodesicSegment {
 public:
  using Evaluator = std::function<Point(double)>;

  GeodesicSegment(std::string space_id, Point start, Point end, double length,
                  Evaluator eval);

  const std::string& space_id() const { return space_id_; }
  const Point& start() const { return start_; }
  const Point& end() const { return end_; }
  double length() const { return length_; }

  // t is clamped to [0, length()].
  Point at(double t) const;

  // The piece between arclengths t0 and t1, re-parametrized from 0. t0 > t1
  // gives the reversed piece.
  GeodesicSegment slice(double t0, double t1) const;
  GeodesicSegment reversed() const { return slice(length_, 0); }

 private:
  std::string space_id_;
  Point start_;
  Point end_;
  double length_;
  Evaluator eval_;
};

class GeodesicSpace {
 public:
  virtual ~GeodesicSpace() = default;

  // Short identifier, e.g. "sphere(k=1)".
  virtual std::string id() const = 0;
  // Descriptor JSON text that rebuilds this space.
  virtual std::string descriptor() const = 0;

  virtual double distance(const Point& a, const Point& b) const = 0;

  // Every minimal geodesic from a to b, up to tolerances().tie ties. Never
  // empty for a != b.
  virtual std::vector<GeodesicSegment> minimal_geodesics(const Point& a,
                                                         const Point& b) const = 0;

  // Random point within distance radius of center: uniform initial
  // direction, uniform radius.
  virtual Point sample_ball(const Point& center, double radius,
                            Rng& rng) const = 0;

  // Endpoint of the geodesic leaving p at the given heading (radians in the
  // space's tangent chart at p) after `length`. nullopt where the space has
  // no such chart or the path leaves the space. The path need not be
  // minimal; callers check.
  virtual std::optional<Point> shoot(const Point& p, double heading,
                                     double length) const = 0;

  // Curvature where analytically known.
  virtual std::optional<double> known_curvature() const { return std::nullopt; }

  // True if results are graph approximations and verdicts are diagnostic.
  virtual bool diagnostic_only() const { return false; }

  virtual bool contains(const Point&) const { return true; }

  // Length below which distances are not resolved (mesh spacing); 0 for
  // analytic spaces.
  virtual double resolution() const { return 0; }

  // Coordinates for reports and descriptors, and their inverse.
  virtual std::vector<double> coords(const Point& p) const = 0;
  virtual Point point_from_coords(std::span<const double> c) const = 0;
  virtual Point default_center() const = 0;

  // distance(q, .) for repeated queries from one source. Spaces with
  // expensive distances override this to share per-source work.
  virtual std::function<double(const Point&)> distance_from(const Point& q) const;

  bool same_point(const Point& a, const Point& b) const {
    return distance(a, b) <= tolerances().point;
  }

  const Tolerances& tolerances() const { return default_tolerances(); }
};

using SpacePtr = std::shared_ptr<const GeodesicSpace>;

// Analytic spaces.
SpacePtr make_euclidean_plane();
// Round sphere of curvature k > 0, |k| in [1e-6, 1e6].
SpacePtr make_sphere(double k);
// Hyperboloid model of curvature k < 0, |k| in [1e-6, 1e6].
SpacePtr make_hyperbolic(double k);
// Euclidean cone over a circle of the given perimeter.
SpacePtr make_cone(double perimeter);
// Three rays glued at their origin.
SpacePtr make_tripod();
// The smaller closed region of S^2_k bounded by the geodesic triangle on the
// three vertices, given as unit vectors of the embedding.
SpacePtr make_spherical_triangle_domain(double k,
                                        const std::array<std::array<double, 3>, 3>& vertices);

}  // namespace cmpk
