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
#include <cmath>
#include <numbers>

#include "cmpk/tolerances.hpp"

namespace cmpk {

// Curvature constant k of the model surface S^2_k, in 1/length^2.
class Curvature {
 public:
  // Throws DomainError for NaN or infinite k.
  explicit Curvature(double k);

  double value() const { return k_; }
  bool positive() const { return k_ > 0; }

  // pi/sqrt(k) for k>0, +inf otherwise.
  double max_side() const;
  // 2 pi/sqrt(k) minus the admissibility margin for k>0, +inf otherwise.
  double max_perimeter(const Tolerances& tol = default_tolerances()) const;

  friend bool operator==(const Curvature&, const Curvature&) = default;

 private:
  double k_;
};

// Side lengths of a triangle. The angle opposite `c` is the one the
// comparison kernels return, i.e. a = |pq|, b = |pr|, c = |qr| gives the
// angle at p.
struct SideTriple {
  double a = 0;
  double b = 0;
  double c = 0;

  double perimeter() const { return a + b + c; }
};

// Throws DomainError unless all sides are finite, nonnegative, satisfy the
// triangle inequality within tol.triangle_rel * perimeter, and (k>0) the
// perimeter bound. Returns the triple with tolerated violations snapped onto
// the degenerate boundary.
SideTriple validate_sides(Curvature k, SideTriple sides,
                          const Tolerances& tol = default_tolerances());

// cs_k(d) = cos(sqrt(k) d), cosh(sqrt(-k) d), or 1 at k = 0.
double generalized_cos(Curvature k, double d,
                       const Tolerances& tol = default_tolerances());
// sn_k(d) = sin(sqrt(k) d)/sqrt(k), sinh(sqrt(-k) d)/sqrt(-k), or d at k = 0.
double generalized_sin(Curvature k, double d,
                       const Tolerances& tol = default_tolerances());
// md_k(d) = (1 - cs_k(d))/k, with the flat limit d^2/2. The law of cosines
// in this normalization is continuous through k = 0:
//   md(c) = md(a - b) + 2 sn(a) sn(b) sin^2(gamma/2).
double generalized_versine(Curvature k, double d,
                           const Tolerances& tol = default_tolerances());
// Inverse of generalized_versine on [0, pi/sqrt(k)] (k>0) or [0, inf).
double inverse_generalized_versine(Curvature k, double m,
                                   const Tolerances& tol = default_tolerances());

// Side opposite the angle gamma in the model triangle with sides a, b.
double side_from_angle(Curvature k, double a, double b, double gamma,
                       const Tolerances& tol = default_tolerances());

// Model angle opposite sides.c, i.e. the comparison angle at p for
// sides = (|pq|, |pr|, |qr|).
double comparison_angle(Curvature k, SideTriple sides,
                        const Tolerances& tol = default_tolerances());

// comparison_angle(k, (leg1, leg2, hyp)) - pi/2. Negative is the strict
// lower-bound side, positive the strict upper-bound side.
double pythagorean_defect(Curvature k, double leg1, double leg2, double hyp,
                          const Tolerances& tol = default_tolerances());

// |q~ s~| where s~ sits on [p~ r~] at arclength t from p~ in the comparison
// triangle with |pq| = d_qp, |qr| = d_qr, |pr| = d_pr.
double comparison_distance_at(Curvature k, double d_qp, double d_qr,
                              double d_pr, double t,
                              const Tolerances& tol = default_tolerances());

struct ComparisonTriangle {
  Curvature k;
  SideTriple sides;
  // angles[0] opposite sides.a, angles[1] opposite sides.b, angles[2]
  // opposite sides.c.
  std::array<double, 3> angles{};

  double angle_sum() const { return angles[0] + angles[1] + angles[2]; }
};

ComparisonTriangle make_comparison_triangle(
    Curvature k, SideTriple sides, const Tolerances& tol = default_tolerances());

}  // namespace cmpk
