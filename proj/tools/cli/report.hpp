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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmpk/criteria.hpp"
#include "cmpk/estimator.hpp"

namespace cmpk::cli {

using ojson = nlohmann::ordered_json;

// %.17g, round-trip exact; "nan", "inf", "-inf" for non-finite values.
std::string fmt(double v);
// Space-separated %.17g list.
std::string fmt(const std::vector<double>& v);

class Csv {
 public:
  explicit Csv(std::vector<std::string> header);
  void row(const std::vector<std::string>& fields);
  const std::string& str() const { return text_; }

 private:
  std::size_t width_;
  std::string text_;
};

// Throws IoError on failure; creates parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

// JSON numbers for possibly non-finite doubles: null when not finite.
ojson num(double v);

ojson to_json(const TestOutcome& o);
ojson to_json(const CurvatureEstimate& e);
ojson to_json(const DefectProfile& p);
ojson to_json(const MultiplicityReport& m, const GeodesicSpace& space);
ojson to_json(const RegionRow& row, const GeodesicSpace& space);

// "q=x y z;r1=..." and "qp=d;..." cells for per-configuration rows.
std::string points_cell(const ConfigSnapshot& c);
std::string distances_cell(const ConfigSnapshot& c);

}  // namespace cmpk::cli
