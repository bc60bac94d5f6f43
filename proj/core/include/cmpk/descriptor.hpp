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

#include <optional>
#include <string>

#include "cmpk/geodesic_space.hpp"

namespace cmpk {

inline constexpr int kDescriptorSchema = 1;

// Builds a space from a JSON descriptor, e.g. {"type":"sphere","k":1}.
//
//   {"type":"plane"}
//   {"type":"sphere","k":K}                     K > 0
//   {"type":"hyperbolic","k":K}                 K < 0
//   {"type":"cone","perimeter":L}               L > 0
//   {"type":"tripod"}
//   {"type":"spherical_triangle","k":K,"vertices":[[x,y,z],[x,y,z],[x,y,z]]}
//   {"type":"mesh","path":"file.obj","steiner":S}
//   {"type":"mesh","generator":"icosphere"|"octahedron"|"square_grid",
//    "level":N,"steiner":S}
//
// Every descriptor may carry "schema": 1. Unknown keys, a missing type, or
// bad parameters throw SpaceError. `steiner_override` replaces a mesh
// descriptor's steiner count.
SpacePtr space_from_descriptor(const std::string& json_text,
                               std::optional<int> steiner_override = std::nullopt);

// Accepts either inline JSON (first non-blank character '{') or a path to a
// file holding it.
SpacePtr load_space(const std::string& json_or_path,
                    std::optional<int> steiner_override = std::nullopt);

}  // namespace cmpk
