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

#include "cmpk/descriptor.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cmpk/errors.hpp"
#include "cmpk/mesh.hpp"

namespace cmpk {
namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (key != "type" && key != "schema" && !allowed.count(key)) {
      throw SpaceError("unknown key '" + key + "' in " + j.at("type").get<std::string>() +
                       " descriptor");
    }
  }
}

double number(const json& j, const char* key) {
  if (!j.contains(key)) throw SpaceError(std::string("descriptor is missing '") + key + "'");
  if (!j.at(key).is_number()) throw SpaceError(std::string("'") + key + "' must be a number");
  return j.at(key).get<double>();
}

}  // namespace

SpacePtr space_from_descriptor(const std::string& text, std::optional<int> steiner_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpaceError(std::string("space descriptor is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw SpaceError("space descriptor needs a string 'type'");
  }
  if (j.contains("schema") && j.at("schema") != kDescriptorSchema) {
    throw SpaceError("unsupported descriptor schema " + j.at("schema").dump());
  }
  const auto type = j.at("type").get<std::string>();
  if (type == "plane") {
    check_keys(j, {});
    return make_euclidean_plane();
  }
  if (type == "sphere") {
    check_keys(j, {"k"});
    return make_sphere(number(j, "k"));
  }
  if (type == "hyperbolic") {
    check_keys(j, {"k"});
    return make_hyperbolic(number(j, "k"));
  }
  if (type == "cone") {
    check_keys(j, {"perimeter"});
    return make_cone(number(j, "perimeter"));
  }
  if (type == "tripod") {
    check_keys(j, {});
    return make_tripod();
  }
  if (type == "spherical_triangle") {
    check_keys(j, {"k", "vertices"});
    const auto& v = j.contains("vertices") ? j.at("vertices") : json();
    if (!v.is_array() || v.size() != 3) throw SpaceError("'vertices' must hold three vectors");
    std::array<std::array<double, 3>, 3> verts{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!v[i].is_array() || v[i].size() != 3) throw SpaceError("each vertex needs 3 numbers");
      for (std::size_t c = 0; c < 3; ++c) {
        if (!v[i][c].is_number()) throw SpaceError("vertex coordinates must be numbers");
        verts[i][c] = v[i][c].get<double>();
      }
    }
    return make_spherical_triangle_domain(number(j, "k"), verts);
  }
  if (type == "mesh") {
    check_keys(j, {"path", "generator", "level", "steiner"});
    int steiner = 0;
    if (j.contains("steiner")) {
      if (!j.at("steiner").is_number_integer()) throw SpaceError("'steiner' must be an integer");
      steiner = j.at("steiner").get<int>();
    }
    if (steiner_override) steiner = *steiner_override;
    if (steiner < 0) throw SpaceError("'steiner' must be >= 0");
    if (j.contains("generator") == j.contains("path"))
      throw SpaceError("mesh needs exactly one of 'path' and 'generator'");
    if (j.contains("generator")) {
      const auto& g = j.at("generator");
      int level = 0;
      if (j.contains("level")) {
        if (!j.at("level").is_number_integer()) throw SpaceError("'level' must be an integer");
        level = j.at("level").get<int>();
      }
      json origin{{"type", "mesh"}, {"generator", g}, {"level", level}};
      if (g == "icosphere") {
        if (level < 0 || level > 6) throw SpaceError("icosphere level must be in [0, 6]");
        return mesh_space(make_icosphere(level), steiner, origin.dump());
      }
      if (g == "octahedron") return mesh_space(make_octahedron(), steiner, origin.dump());
      if (g == "square_grid") {
        if (level < 1 || level > 512) throw SpaceError("square_grid level must be in [1, 512]");
        return mesh_space(make_square_grid(level), steiner, origin.dump());
      }
      throw SpaceError("unknown mesh generator " + g.dump());
    }
    if (j.contains("level")) throw SpaceError("'level' only applies to generated meshes");
    if (!j.at("path").is_string()) throw SpaceError("mesh 'path' must be a string");
    const auto path = j.at("path").get<std::string>();
    try {
      return mesh_space(load_obj(path), steiner, path);
    } catch (const ParseError& e) {
      throw SpaceError(std::string("mesh ") + path + ": " + e.what());
    } catch (const MeshError& e) {
      throw SpaceError(std::string("mesh ") + path + ": " + e.what());
    }
  }
  throw SpaceError("unknown space type '" + type + "'");
}

SpacePtr load_space(const std::string& json_or_path, std::optional<int> steiner_override) {
  const auto first = json_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && json_or_path[first] == '{') {
    return space_from_descriptor(json_or_path, steiner_override);
  }
  std::ifstream in(json_or_path);
  if (!in) throw IoError("cannot read space descriptor file " + json_or_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return space_from_descriptor(buf.str(), steiner_override);
}

}  // namespace cmpk
