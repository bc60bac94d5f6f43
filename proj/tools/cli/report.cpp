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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "cmpk/errors.hpp"

namespace cmpk::cli {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += fmt(v[i]);
  }
  return s;
}

namespace {

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) return f;
  std::string q = "\"";
  for (char c : f) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

Csv::Csv(std::vector<std::string> header) : width_(header.size()) { row(header); }

void Csv::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw Error("csv row width mismatch");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) text_ += ',';
    text_ += csv_field(fields[i]);
  }
  text_ += '\n';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

ojson num(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

ojson to_json(const TestOutcome& o) {
  ojson j;
  j["criterion"] = std::string(to_string(o.criterion));
  j["k"] = o.k;
  j["scale"] = o.scale;
  j["defect"] = num(o.defect);
  j["defect_cba"] = num(o.defect_cba);
  j["tolerance"] = o.tolerance;
  j["verdict"] = std::string(to_string(o.verdict));
  j["admissible"] = o.admissible;
  j["multi_geodesic"] = o.config.multi_geodesic;
  return j;
}

namespace {

ojson bound_json(const BoundResult& b) {
  ojson j;
  j["value"] = b.value ? ojson(*b.value) : ojson(nullptr);
  j["residual"] = b.value ? num(b.residual) : ojson(nullptr);
  j["passing"] = b.value ? ojson(b.passing) : ojson(nullptr);
  j["failing"] = b.value ? ojson(b.failing) : ojson(nullptr);
  j["evaluations"] = b.evaluations;
  j["note"] = b.note;
  return j;
}

}  // namespace

ojson to_json(const CurvatureEstimate& e) {
  ojson j;
  j["space"] = e.space_id;
  j["radius"] = e.region.radius;
  ojson crit = ojson::array();
  for (auto c : e.criteria) crit.push_back(std::string(to_string(c)));
  j["criteria"] = crit;
  j["samples"] = e.n_samples;
  j["seed"] = e.seed;
  j["resolution"] = e.resolution;
  j["k_cbb"] = bound_json(e.cbb);
  j["k_cba"] = bound_json(e.cba);
  j["rejected"] = e.rejected;
  j["skipped"] = e.skipped;
  return j;
}

ojson to_json(const DefectProfile& p) {
  ojson j;
  j["eps"] = p.eps;
  j["chi"] = p.chi;
  j["attempted"] = p.attempted;
  j["skipped"] = p.skipped;
  j["skip_fraction"] = p.skip_fraction;
  j["noise_floor"] = p.noise_floor;
  j["threshold"] = p.threshold;
  j["valid"] = p.valid;
  j["classification"] = std::string(to_string(p.classification));
  return j;
}

ojson to_json(const MultiplicityReport& m, const GeodesicSpace& space) {
  ojson j;
  j["pairs"] = m.pairs;
  j["multi_pairs"] = m.multi_pairs;
  ojson ex = ojson::array();
  for (auto& [a, b] : m.examples) ex.push_back({space.coords(a), space.coords(b)});
  j["examples"] = ex;
  return j;
}

ojson to_json(const RegionRow& row, const GeodesicSpace& space) {
  ojson j;
  j["center"] = row.center;
  j["diagnostic_only"] = row.diagnostic_only;
  j["error_bar"] = row.error_bar;
  j["estimate"] = row.estimate ? to_json(*row.estimate) : ojson(nullptr);
  j["estimate_error"] = row.estimate_error;
  j["profile"] = row.profile ? to_json(*row.profile) : ojson(nullptr);
  j["profile_error"] = row.profile_error;
  j["multiplicity"] = row.multiplicity ? to_json(*row.multiplicity, space) : ojson(nullptr);
  j["multiplicity_error"] = row.multiplicity_error;
  return j;
}

std::string points_cell(const ConfigSnapshot& c) {
  std::string s;
  for (auto& [name, x] : c.points) {
    if (!s.empty()) s += ';';
    s += name + '=' + fmt(x);
  }
  return s;
}

std::string distances_cell(const ConfigSnapshot& c) {
  std::string s;
  for (auto& [name, d] : c.distances) {
    if (!s.empty()) s += ';';
    s += name + '=' + fmt(d);
  }
  return s;
}

}  // namespace cmpk::cli
