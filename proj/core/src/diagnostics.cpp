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
#include <cmath>
#include <numbers>

#include "cmpk/criteria.hpp"
#include "cmpk/errors.hpp"

namespace cmpk {

namespace {

constexpr std::uint64_t kProfileStream = 0x7c0f11e;

const GeodesicSegment& pick(const std::vector<GeodesicSegment>& gs) {
  if (gs.empty()) throw DegenerateError("no geodesic between coincident points");
  return gs.front();
}

}  // namespace

FirstVariationReport first_variation_check(const GeodesicSpace& space, const Point& q,
                                           const GeodesicSegment& seg, double t_star,
                                           const std::vector<double>& steps,
                                           const CriteriaOptions& opts) {
  const double L = seg.length();
  if (!(t_star >= 0 && t_star < L)) throw DomainError("first variation: t* outside [0, L)");
  FirstVariationReport rep;
  rep.t = t_star;
  Point p = seg.at(t_star);
  auto f = space.distance_from(q);
  rep.distance = f(p);
  if (rep.distance < space.tolerances().geodesic)
    throw DegenerateError("first variation: q lies on the segment at t*");

  // Smallest angle over all [pq]: the direction-set distance in the
  // lower-bound form of the formula.
  auto to_q = space.minimal_geodesics(p, q);
  rep.multi_geodesic = to_q.size() > 1;
  auto forward = seg.slice(t_star, L);
  rep.angle = std::numbers::pi;
  for (auto& g : to_q)
    rep.angle = std::min(rep.angle, angle_at(space, g, forward, Curvature(0), opts.ladder).angle);
  rep.target = -std::cos(rep.angle);

  for (double h : steps) {
    if (!(h > 0) || t_star + h > L) throw DomainError("first variation: step leaves the segment");
    double slope = (f(seg.at(t_star + h)) - rep.distance) / h;
    rep.steps.push_back(h);
    rep.slopes.push_back(slope);
    rep.errors.push_back(std::abs(slope - rep.target));
  }
  rep.decaying = true;
  for (std::size_t j = 1; j < rep.errors.size(); ++j) {
    double e0 = rep.errors[j - 1], e1 = rep.errors[j];
    rep.orders.push_back(e0 > 0 && e1 > 0 ? std::log(e0 / e1) / std::log(rep.steps[j - 1] / rep.steps[j])
                                          : 0.0);
    if (e1 > e0 && e1 > 1e-10) rep.decaying = false;
  }
  return rep;
}

AngleSumReport angle_sum_check(const GeodesicSpace& space, const Point& q,
                               const GeodesicSegment& seg, double t_interior,
                               const CriteriaOptions& opts) {
  const double L = seg.length();
  if (!(t_interior > 0 && t_interior < L)) throw DomainError("angle sum: point is not interior");
  AngleSumReport rep;
  rep.t = t_interior;
  Point p = seg.at(t_interior);
  auto to_q = pick(space.minimal_geodesics(p, q));
  rep.angle_to_start =
      angle_at(space, to_q, seg.slice(t_interior, 0), Curvature(0), opts.ladder).angle;
  rep.angle_to_end = angle_at(space, to_q, seg.slice(t_interior, L), Curvature(0), opts.ladder).angle;
  rep.sum = rep.angle_to_start + rep.angle_to_end;
  rep.excess = rep.sum - std::numbers::pi;
  return rep;
}

MultiplicityReport geodesic_multiplicity_probe(
    const GeodesicSpace& space, const Point& center, double radius, int n_pairs, Rng& rng,
    const std::vector<std::pair<Point, Point>>& extra_pairs) {
  MultiplicityReport rep;
  auto probe = [&](const Point& a, const Point& b) {
    if (space.same_point(a, b)) return;
    ++rep.pairs;
    if (space.minimal_geodesics(a, b).size() > 1) {
      ++rep.multi_pairs;
      if (rep.examples.size() < 8) rep.examples.emplace_back(a, b);
    }
  };
  for (int i = 0; i < n_pairs; ++i) {
    Point a = space.sample_ball(center, radius, rng);
    Point b = space.sample_ball(center, radius, rng);
    probe(a, b);
  }
  for (auto& [a, b] : extra_pairs) probe(a, b);
  return rep;
}

std::string_view to_string(ProfileClass c) {
  switch (c) {
    case ProfileClass::kVanishing: return "vanishing";
    case ProfileClass::kNonVanishing: return "non-vanishing";
    case ProfileClass::kInconclusive: return "inconclusive";
  }
  return "?";
}

ProfileClass classify_profile(const std::vector<double>& eps, const std::vector<double>& chi,
                              double noise_floor) {
  if (eps.size() < 2 || eps.size() != chi.size()) return ProfileClass::kInconclusive;
  const double threshold = 4 * noise_floor;
  const std::size_t n = eps.size();
  double c_min = chi[n - 1], c_prev = chi[n - 2];
  if (c_min <= threshold) return ProfileClass::kVanishing;
  if (c_prev > 0 && c_min <= c_prev * std::sqrt(eps[n - 1] / eps[n - 2]))
    return ProfileClass::kVanishing;
  if (c_min >= 0.8 * c_prev) return ProfileClass::kNonVanishing;
  return ProfileClass::kInconclusive;
}

DefectProfile right_angle_defect_profile(const GeodesicSpace& space, const Point& x,
                                       const std::vector<double>& eps_ladder, int n_per_eps,
                                       std::uint64_t seed, const ProfileOptions& opts) {
  if (eps_ladder.size() < 2) throw DomainError("profile: need at least two ladder levels");
  for (std::size_t i = 0; i < eps_ladder.size(); ++i)
    if (!(eps_ladder[i] > 0) || (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1])))
      throw DomainError("profile: ladder must be positive and strictly decreasing");
  if (n_per_eps < 1) throw DomainError("profile: need at least one configuration per level");

  DefectProfile prof;
  prof.eps = eps_ladder;
  prof.noise_floor = opts.noise_floor;
  prof.threshold = 4 * opts.noise_floor;
  for (double eps : eps_ladder) {
    double chi = 0;
    int skipped = 0;
    for (int i = 0; i < n_per_eps; ++i) {
      Rng rng = make_rng(seed, kProfileStream, static_cast<std::uint64_t>(i));
      std::uniform_real_distribution<double> u(0, 1);
      Point p = space.sample_ball(x, eps / 2, rng);
      double heading = 2 * std::numbers::pi * u(rng);
      double leg1 = (opts.leg_min + (opts.leg_max - opts.leg_min) * u(rng)) * eps / 2;
      double leg2 = (opts.leg_min + (opts.leg_max - opts.leg_min) * u(rng)) * eps / 2;
      try {
        auto m = construct_right_angle(space, p, heading, heading + std::numbers::pi / 2, leg1,
                                       leg2, opts.criteria);
        double ratio = m.d_qr * m.d_qr / (m.d_pq * m.d_pq + m.d_pr * m.d_pr);
        chi = std::max(chi, std::abs(ratio - 1));
      } catch (const RightAngleUnavailable&) {
        ++skipped;
      }
    }
    prof.chi.push_back(chi);
    prof.attempted.push_back(n_per_eps);
    prof.skipped.push_back(skipped);
    double frac = static_cast<double>(skipped) / n_per_eps;
    prof.skip_fraction.push_back(frac);
    if (frac > 0.5) prof.valid = false;
  }
  prof.classification = prof.valid ? classify_profile(prof.eps, prof.chi, prof.noise_floor)
                                   : ProfileClass::kInconclusive;
  return prof;
}

}  // namespace cmpk
