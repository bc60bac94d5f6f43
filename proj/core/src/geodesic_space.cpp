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

#include "cmpk/geodesic_space.hpp"

#include <algorithm>
#include <utility>

#include "cmpk/errors.hpp"

namespace cmpk {

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

GeodesicSegment::GeodesicSegment(std::string space_id, Point start, Point end,
                                 double length, Evaluator eval)
    : space_id_(std::move(space_id)),
      start_(start),
      end_(end),
      length_(length),
      eval_(std::move(eval)) {
  if (!(length >= 0) || !eval_) {
    throw DegenerateError("geodesic segment needs a length >= 0 and an evaluator");
  }
}

Point GeodesicSegment::at(double t) const {
  if (t <= 0) return start_;
  if (t >= length_) return end_;
  return eval_(t);
}

GeodesicSegment GeodesicSegment::slice(double t0, double t1) const {
  t0 = std::clamp(t0, 0.0, length_);
  t1 = std::clamp(t1, 0.0, length_);
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  auto parent = *this;
  return GeodesicSegment(space_id_, at(t0), at(t1), std::abs(t1 - t0),
                         [parent, t0, dir](double s) { return parent.at(t0 + dir * s); });
}

std::function<double(const Point&)> GeodesicSpace::distance_from(const Point& q) const {
  return [this, q](const Point& p) { return distance(q, p); };
}

}  // namespace cmpk
