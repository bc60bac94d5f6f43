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

namespace cmpk {

// Every numerical threshold used by the library. Lengths are in the space's
// length unit, angles in radians.
struct Tolerances {
  double triangle_rel = 1e-9;  // triangle inequality slack, times perimeter
  double angle = 1e-9;         // model-triangle round trip
  double clamp = 1e-9;         // half-angle terms may leave [0,1] by this much
  double series_cutoff = 1e-8; // |k| d^2 below this uses Taylor branches
  double admissibility_margin = 1e-6;  // k>0: perimeter < (2 pi - margin)/sqrt(k)
  double degenerate_length = 1e-12;

  double point = 1e-10;     // point equality in ambient coordinates
  double geodesic = 1e-9;   // geodesic minimality, foot precondition
  double tie = 1e-9;        // two minima or two geodesics count as tied

  double verdict_abs = 1e-9;    // tau_abs
  double verdict_scale = 1e-4;  // c_tol
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace cmpk
