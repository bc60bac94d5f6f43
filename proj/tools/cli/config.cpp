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

#include "config.hpp"

#include <cstdlib>
#include <set>

namespace cmpk::cli {

using nlohmann::json;

namespace {

double get_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config '" + key + "' must be a number");
  return v.get<double>();
}

int get_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("config '" + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> get_numbers(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError("config '" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (auto& x : v) out.push_back(get_number(x, key));
  return out;
}

std::string get_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("config '" + key + "' must be a string");
  return v.get<std::string>();
}

RegionSpec region_from_json(const json& v) {
  if (!v.is_object()) throw ConfigError("config 'region' entries must be objects");
  RegionSpec r;
  for (auto& [key, val] : v.items()) {
    if (key == "center") r.center = get_numbers(val, "region.center");
    else if (key == "radius") r.radius = get_number(val, "region.radius");
    else throw ConfigError("unknown key 'region." + key + "'");
  }
  return r;
}

}  // namespace

void apply_json(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (auto& [key, v] : j.items()) {
    if (key == "schema") {
      if (v != 1) throw ConfigError("unsupported config schema " + v.dump());
    } else if (key == "space") {
      cfg.space = v.is_object() ? v.dump() : get_string(v, key);
    } else if (key == "criterion") {
      if (v.is_array()) {
        std::string s;
        for (auto& c : v) s += (s.empty() ? "" : ",") + get_string(c, key);
        cfg.criterion = s;
      } else {
        cfg.criterion = get_string(v, key);
      }
    } else if (key == "k") {
      cfg.k_grid = {get_number(v, key)};
    } else if (key == "k_grid") {
      cfg.k_grid = get_numbers(v, key);
    } else if (key == "k_bracket") {
      cfg.k_bracket = get_numbers(v, key);
    } else if (key == "region") {
      cfg.regions.clear();
      if (v.is_array())
        for (auto& r : v) cfg.regions.push_back(region_from_json(r));
      else
        cfg.regions.push_back(region_from_json(v));
    } else if (key == "samples") {
      cfg.samples = get_int(v, key);
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ConfigError("config 'seed' must be a nonnegative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "out") {
      cfg.out = get_string(v, key);
    } else if (key == "steiner") {
      cfg.steiner = get_int(v, key);
    } else if (key == "tol_scale") {
      cfg.tol_scale = get_number(v, key);
    } else if (key == "resolution") {
      cfg.resolution = get_number(v, key);
    } else if (key == "eps") {
      cfg.eps = get_numbers(v, key);
    } else if (key == "per_eps") {
      cfg.per_eps = get_int(v, key);
    } else if (key == "reference") {
      cfg.reference = v.is_object() ? v.dump() : get_string(v, key);
    } else if (key == "pairs") {
      cfg.pairs = get_int(v, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

RegionSpec parse_region(const std::string& text) {
  RegionSpec r;
  auto cpos = text.find("center=");
  auto rpos = text.find("radius=");
  if (cpos == std::string::npos && rpos == std::string::npos)
    throw ConfigError("--region expects center=...,radius=...");
  auto parse_num = [](const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
      throw ConfigError("--region: '" + s + "' is not a number");
    return v;
  };
  if (rpos != std::string::npos) {
    auto end = text.find(',', rpos);
    r.radius = parse_num(text.substr(rpos + 7, end == std::string::npos ? end : end - rpos - 7));
  }
  if (cpos != std::string::npos) {
    auto start = cpos + 7;
    auto stop = rpos != std::string::npos && rpos > cpos ? rpos : text.size();
    std::string body = text.substr(start, stop - start);
    while (!body.empty() && body.back() == ',') body.pop_back();
    std::vector<double> c;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      c.push_back(parse_num(body.substr(pos, comma == std::string::npos ? comma : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    r.center = c;
  }
  return r;
}

void validate(const RunConfig& cfg) {
  if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
  if (cfg.per_eps && *cfg.per_eps < 1) throw ConfigError("per_eps must be >= 1");
  if (cfg.pairs < 1) throw ConfigError("pairs must be >= 1");
  if (!(cfg.tol_scale > 0)) throw ConfigError("tol_scale must be > 0");
  if (!(cfg.resolution > 0)) throw ConfigError("resolution must be > 0");
  if (cfg.steiner && *cfg.steiner < 0) throw ConfigError("steiner must be >= 0");
  if (cfg.k_grid.empty()) throw ConfigError("k_grid must not be empty");
  if (cfg.k_bracket.size() != 2 || !(cfg.k_bracket[0] < cfg.k_bracket[1]))
    throw ConfigError("k_bracket must be [lo, hi] with lo < hi");
  if (cfg.regions.empty()) throw ConfigError("at least one region is required");
  for (auto& r : cfg.regions)
    if (!(r.radius > 0)) throw ConfigError("region radius must be > 0");
  if (cfg.eps.size() < 2) throw ConfigError("eps needs at least two levels");
  for (std::size_t i = 0; i < cfg.eps.size(); ++i)
    if (!(cfg.eps[i] > 0) || (i > 0 && !(cfg.eps[i] < cfg.eps[i - 1])))
      throw ConfigError("eps must be positive and strictly decreasing");
  if (cfg.out.empty()) throw ConfigError("out must not be empty");
}

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["space"] = cfg.space;
  j["criterion"] = cfg.criterion;
  j["k_grid"] = cfg.k_grid;
  j["k_bracket"] = cfg.k_bracket;
  auto regions = nlohmann::ordered_json::array();
  for (auto& r : cfg.regions) {
    nlohmann::ordered_json rj;
    rj["center"] = r.center ? nlohmann::ordered_json(*r.center) : nlohmann::ordered_json(nullptr);
    rj["radius"] = r.radius;
    regions.push_back(rj);
  }
  j["region"] = regions;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["steiner"] = cfg.steiner ? nlohmann::ordered_json(*cfg.steiner) : nlohmann::ordered_json(nullptr);
  j["tol_scale"] = cfg.tol_scale;
  j["resolution"] = cfg.resolution;
  j["eps"] = cfg.eps;
  j["per_eps"] = cfg.per_eps ? nlohmann::ordered_json(*cfg.per_eps) : nlohmann::ordered_json(nullptr);
  j["reference"] = cfg.reference;
  j["pairs"] = cfg.pairs;
  return j;
}

}  // namespace cmpk::cli
