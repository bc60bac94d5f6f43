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

#include "cmpk/model_geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cmpk/errors.hpp"

namespace cmpk {
namespace {

constexpr double kPi = std::numbers::pi;

void require_length(double d, const char* what) {
  if (!std::isfinite(d) || d < 0) {
    throw DomainError(std::string(what) + " must be finite and >= 0, got " +
                      std::to_string(d));
  }
}

// Unchecked kernels. d may exceed pi/sqrt(k) here; callers that need the
// public precondition check it themselves.
double cs(double k, double d, double cutoff) {
  const double x = k * d * d;
  if (std::abs(x) < cutoff) return 1 - x / 2 + x * x / 24;
  if (k > 0) return std::cos(std::sqrt(k) * d);
  return std::cosh(std::sqrt(-k) * d);
}

double sn(double k, double d, double cutoff) {
  const double x = k * d * d;
  if (std::abs(x) < cutoff) return d * (1 - x / 6 + x * x / 120);
  if (k > 0) {
    const double s = std::sqrt(k);
    return std::sin(s * d) / s;
  }
  const double s = std::sqrt(-k);
  return std::sinh(s * d) / s;
}

double md(double k, double d, double cutoff) {
  const double x = k * d * d;
  if (std::abs(x) < cutoff) return d * d / 2 * (1 - x / 12 + x * x / 360);
  if (k > 0) {
    const double h = std::sin(std::sqrt(k) * d / 2);
    return 2 * h * h / k;
  }
  const double h = std::sinh(std::sqrt(-k) * d / 2);
  return -2 * h * h / k;
}

double md_inverse(double k, double m, const Tolerances& tol) {
  if (m < 0) {
    if (m < -tol.clamp * std::max(1.0, std::abs(m))) {
      throw DomainError("negative versine argument " + std::to_string(m));
    }
    m = 0;
  }
  const double z = std::abs(k) * m / 2;
  if (z < tol.series_cutoff) {
    const double base = std::sqrt(2 * m);
    if (k >= 0) return base * (1 + z / 6 + 3 * z * z / 40);
    return base * (1 - z / 6 + 3 * z * z / 40);
  }
  if (k > 0) {
    double u = z;
    if (u > 1) {
      if (u > 1 + tol.clamp) {
        throw DomainError("versine exceeds its maximum 2/k for k=" +
                          std::to_string(k));
      }
      u = 1;
    }
    return 2 * std::asin(std::sqrt(u)) / std::sqrt(k);
  }
  return 2 * std::asinh(std::sqrt(z)) / std::sqrt(-k);
}

void require_admissible_side(const Curvature& k, double d, const char* what) {
  require_length(d, what);
  if (k.positive() && d >= k.max_side()) {
    throw DomainError(std::string(what) + "=" + std::to_string(d) +
                      " is not below pi/sqrt(k)=" + std::to_string(k.max_side()));
  }
}

// Clamps a normalized half-angle term into [0, 1].
double clamp_unit(double v, const Tolerances& tol, const char* what) {
  if (v < -tol.clamp || v > 1 + tol.clamp) {
    throw DomainError(std::string(what) + " term " + std::to_string(v) +
                      " is outside [0,1] beyond the clamping tolerance");
  }
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

Curvature::Curvature(double k) : k_(k) {
  if (!std::isfinite(k)) throw DomainError("curvature must be finite");
}

double Curvature::max_side() const {
  return k_ > 0 ? kPi / std::sqrt(k_) : std::numeric_limits<double>::infinity();
}

double Curvature::max_perimeter(const Tolerances& tol) const {
  return k_ > 0 ? (2 * kPi - tol.admissibility_margin) / std::sqrt(k_)
                : std::numeric_limits<double>::infinity();
}

SideTriple validate_sides(Curvature k, SideTriple s, const Tolerances& tol) {
  require_length(s.a, "side a");
  require_length(s.b, "side b");
  require_length(s.c, "side c");
  const double slack = tol.triangle_rel * s.perimeter();
  auto snap = [&](double& side, double x, double y, const char* name) {
    if (side > x + y) {
      if (side > x + y + slack) {
        throw DomainError(std::string("triangle inequality violated by side ") +
                          name);
      }
      side = x + y;
    }
  };
  snap(s.a, s.b, s.c, "a");
  snap(s.b, s.a, s.c, "b");
  snap(s.c, s.a, s.b, "c");
  if (k.positive() && s.perimeter() >= k.max_perimeter(tol)) {
    throw DomainError("perimeter " + std::to_string(s.perimeter()) +
                      " is not below 2*pi/sqrt(k) (minus margin) = " +
                      std::to_string(k.max_perimeter(tol)));
  }
  return s;
}

double generalized_cos(Curvature k, double d, const Tolerances& tol) {
  require_admissible_side(k, d, "length");
  return cs(k.value(), d, tol.series_cutoff);
}

double generalized_sin(Curvature k, double d, const Tolerances& tol) {
  require_admissible_side(k, d, "length");
  return sn(k.value(), d, tol.series_cutoff);
}

double generalized_versine(Curvature k, double d, const Tolerances& tol) {
  require_length(d, "length");
  if (k.positive() && d > k.max_side()) {
    throw DomainError("length exceeds pi/sqrt(k)");
  }
  return md(k.value(), d, tol.series_cutoff);
}

double inverse_generalized_versine(Curvature k, double m, const Tolerances& tol) {
  if (!std::isfinite(m)) throw DomainError("versine must be finite");
  return md_inverse(k.value(), m, tol);
}

double side_from_angle(Curvature k, double a, double b, double gamma,
                       const Tolerances& tol) {
  require_admissible_side(k, a, "side a");
  require_admissible_side(k, b, "side b");
  if (!std::isfinite(gamma) || gamma < -tol.angle || gamma > kPi + tol.angle) {
    throw DomainError("angle must lie in [0, pi], got " + std::to_string(gamma));
  }
  gamma = std::clamp(gamma, 0.0, kPi);
  const double kv = k.value();
  const double cut = tol.series_cutoff;
  const double h = std::sin(gamma / 2);
  const double m = md(kv, std::abs(a - b), cut) + 2 * sn(kv, a, cut) * sn(kv, b, cut) * h * h;
  return md_inverse(kv, m, tol);
}

double comparison_angle(Curvature k, SideTriple sides, const Tolerances& tol) {
  const SideTriple s = validate_sides(k, sides, tol);
  if (s.a <= tol.degenerate_length || s.b <= tol.degenerate_length) {
    throw DegenerateError("comparison angle needs both adjacent sides > 0");
  }
  const double kv = k.value();
  const double cut = tol.series_cutoff;
  const double denom = 2 * sn(kv, s.a, cut) * sn(kv, s.b, cut);
  const double mc = md(kv, s.c, cut);
  const double half_sin2 = (mc - md(kv, std::abs(s.a - s.b), cut)) / denom;
  const double half_cos2 = (md(kv, s.a + s.b, cut) - mc) / denom;
  const double x = clamp_unit(half_sin2, tol, "sin^2(angle/2)");
  const double y = clamp_unit(half_cos2, tol, "cos^2(angle/2)");
  return 2 * std::atan2(std::sqrt(x), std::sqrt(y));
}

double pythagorean_defect(Curvature k, double leg1, double leg2, double hyp,
                          const Tolerances& tol) {
  return comparison_angle(k, {leg1, leg2, hyp}, tol) - kPi / 2;
}

double comparison_distance_at(Curvature k, double d_qp, double d_qr,
                              double d_pr, double t, const Tolerances& tol) {
  const SideTriple s = validate_sides(k, {d_qp, d_pr, d_qr}, tol);
  const double slack = tol.geodesic * std::max(1.0, s.b);
  if (!std::isfinite(t) || t < -slack || t > s.b + slack) {
    throw DomainError("arclength t must lie in [0, |pr|]");
  }
  t = std::clamp(t, 0.0, s.b);
  if (s.a <= tol.degenerate_length) return t;
  if (s.b <= tol.degenerate_length) return s.a;
  const double angle_at_p = comparison_angle(k, s, tol);
  return side_from_angle(k, s.a, t, angle_at_p, tol);
}

ComparisonTriangle make_comparison_triangle(Curvature k, SideTriple sides,
                                            const Tolerances& tol) {
  const SideTriple s = validate_sides(k, sides, tol);
  ComparisonTriangle tri{k, s, {}};
  tri.angles[0] = comparison_angle(k, {s.b, s.c, s.a}, tol);
  tri.angles[1] = comparison_angle(k, {s.a, s.c, s.b}, tol);
  tri.angles[2] = comparison_angle(k, {s.a, s.b, s.c}, tol);
  return tri;
}

}  // namespace cmpk
