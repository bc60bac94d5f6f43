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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmpk/errors.hpp"

namespace cmpk::cli {

// Invalid run configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RegionSpec {
  std::optional<std::vector<double>> center;  // space coordinates; default center if empty
  double radius = 0.2;
};

struct RunConfig {
  std::string space = R"({"type":"plane"})";  // inline JSON or path
  std::string criterion = "pythagorean";       // comma list for estimate
  std::vector<double> k_grid{-2, -1, -0.5, 0, 0.5, 1, 2};
  std::vector<double> k_bracket{-2, 2};
  std::vector<RegionSpec> regions{RegionSpec{}};
  int samples = 100;
  std::uint64_t seed = 1;
  std::string out = ".";
  std::optional<int> steiner;
  double tol_scale = 1;
  double resolution = 0.01;
  std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
  // Profile configurations per level; unset means the command default
  // (1024 for profile, 64 for mesh, where every draw costs graph searches).
  std::optional<int> per_eps;
  std::string reference;  // mesh: analytic space to compare distances with
  int pairs = 500;        // mesh: distance pairs
};

// Overlays the keys of a config object. Unknown keys and wrong types throw
// ConfigError.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

// "center=x,y[,z],radius=r"; either part may be omitted.
RegionSpec parse_region(const std::string& text);

// Range checks; throws ConfigError naming the offending field.
void validate(const RunConfig& cfg);

// Everything except the output directory, which does not affect results.
nlohmann::ordered_json to_json(const RunConfig& cfg);

}  // namespace cmpk::cli
