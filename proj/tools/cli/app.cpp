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

#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cmpk/criteria.hpp"
#include "cmpk/descriptor.hpp"
#include "cmpk/errors.hpp"
#include "cmpk/estimator.hpp"
#include "cmpk/model_geometry.hpp"
#include "cmpk/version.hpp"
#include "config.hpp"
#include "report.hpp"

namespace cmpk::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kFirstVariationStream = 0xf1;
constexpr std::uint64_t kMultiplicityStream = 0x3a1f;
constexpr std::uint64_t kMeshPairStream = 0x6d;

std::shared_ptr<spdlog::logger> logger() {
  auto lg = spdlog::get("cmpk");
  if (!lg) lg = spdlog::stderr_color_mt("cmpk");
  return lg;
}

void configure_logging() {
  auto lg = logger();
  lg->set_level(spdlog::level::warn);
  if (const char* lvl = std::getenv("CMPK_LOG")) lg->set_level(spdlog::level::from_str(lvl));
}

// Ten decimals, trailing zeros trimmed: 1.5707963268, 0.7, 0.
std::string short_fixed(double v) {
  if (!std::isfinite(v)) return fmt(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

// --- model ---------------------------------------------------------------

int cmd_model(const std::string& what, double k_value, const std::vector<double>& sides,
              const std::vector<double>& legs, std::optional<double> gamma, std::ostream& out) {
  Curvature k(k_value);
  if (what == "angle" || what == "triangle") {
    if (sides.size() != 3) throw ConfigError("--sides needs three lengths a,b,c");
    SideTriple s{sides[0], sides[1], sides[2]};
    if (what == "angle") {
      double a = comparison_angle(k, s);
      out << short_fixed(a) << "  defect=" << short_fixed(a - std::numbers::pi / 2) << "\n";
    } else {
      auto t = make_comparison_triangle(k, s);
      out << "angles=" << short_fixed(t.angles[0]) << ',' << short_fixed(t.angles[1]) << ','
          << short_fixed(t.angles[2]) << "  sum=" << short_fixed(t.angle_sum()) << "\n";
    }
    return kOk;
  }
  if (legs.size() != 2) throw ConfigError("--legs needs two lengths a,b");
  if (!gamma) throw ConfigError("--gamma is required for 'model side'");
  out << short_fixed(side_from_angle(k, legs[0], legs[1], *gamma)) << "\n";
  return kOk;
}

// --- shared run context --------------------------------------------------

struct Context {
  RunConfig cfg;
  SpacePtr space;
  std::vector<Region> regions;
  CriteriaOptions copts;
  fs::path out;

  ojson header(const std::string& command) const {
    ojson h;
    h["schema"] = 1;
    h["tool"] = "cmpk";
    h["version"] = std::string(kVersion);
    h["command"] = command;
    h["seed"] = cfg.seed;
    h["space"] = space->id();
    ojson c = to_json(cfg);
    c["space"] = ojson::parse(space->descriptor());
    h["config"] = c;
    return h;
  }

  void write(const std::string& stem, const Csv& csv, const ojson& summary) const {
    write_file(out / (stem + ".csv"), csv.str());
    write_file(out / (stem + ".json"), summary.dump(2) + "\n");
    logger()->info("wrote {} and {}", (out / (stem + ".csv")).string(),
                   (out / (stem + ".json")).string());
  }
};

Context make_context(RunConfig cfg) {
  validate(cfg);
  Context ctx;
  ctx.space = load_space(cfg.space, cfg.steiner);
  logger()->debug("space {}", ctx.space->id());
  for (auto& spec : cfg.regions) {
    Point c = ctx.space->default_center();
    if (spec.center) {
      try {
        c = ctx.space->point_from_coords(*spec.center);
      } catch (const Error& e) {
        throw ConfigError(std::string("bad region center: ") + e.what());
      }
      if (!ctx.space->contains(c)) throw ConfigError("region center lies outside the space");
    }
    ctx.regions.push_back(Region{c, spec.radius});
  }
  ctx.copts.tol.verdict_abs *= cfg.tol_scale;
  ctx.copts.tol.verdict_scale *= cfg.tol_scale;
  ctx.out = cfg.out;
  ctx.cfg = std::move(cfg);
  return ctx;
}

std::vector<CriterionId> parse_criteria(const std::string& list) {
  std::vector<CriterionId> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto id = parse_criterion(name);
    if (!id) throw ConfigError("unknown criterion '" + name + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw ConfigError("no criterion given");
  return out;
}

// --- test ----------------------------------------------------------------

int test_verdicts(const Context& ctx, CriterionId id, std::ostream& out) {
  const auto& sp = *ctx.space;
  SamplingOptions so;
  so.criteria = ctx.copts;
  auto set = draw_samples(sp, ctx.regions.front(), {id}, ctx.cfg.samples, ctx.cfg.seed, so);

  Csv csv({"sample", "k", "criterion", "scale", "defect", "defect_cba", "tolerance", "verdict",
           "admissible", "multi_geodesic", "distances", "points"});
  ojson results = ojson::array();
  int total_fail = 0;
  double lo = INFINITY, hi = -INFINITY;
  std::size_t n_conf = 0;
  for (double k : ctx.cfg.k_grid) {
    auto outcomes = outcomes_at(sp, set, Curvature(k), ctx.copts);
    n_conf = outcomes.size();
    std::map<Verdict, int> counts;
    double klo = INFINITY, khi = -INFINITY;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& o = outcomes[i];
      ++counts[o.verdict];
      klo = std::min(klo, o.defect);
      khi = std::max(khi, o.defect);
      csv.row({std::to_string(i), fmt(k), std::string(to_string(o.criterion)), fmt(o.scale),
               fmt(o.defect), fmt(o.defect_cba), fmt(o.tolerance), std::string(to_string(o.verdict)),
               o.admissible ? "1" : "0", o.config.multi_geodesic ? "1" : "0",
               distances_cell(o.config), points_cell(o.config)});
    }
    lo = std::min(lo, klo);
    hi = std::max(hi, khi);
    total_fail += counts[Verdict::kFail];
    ojson r;
    r["k"] = k;
    r["count"] = outcomes.size();
    r["pass_CBB"] = counts[Verdict::kPassCbb];
    r["pass_CBA"] = counts[Verdict::kPassCba];
    r["pass_both"] = counts[Verdict::kPassBoth];
    r["fail_count"] = counts[Verdict::kFail];
    r["min_defect"] = num(klo);
    r["max_defect"] = num(khi);
    results.push_back(r);
    out << "k=" << fmt(k) << " configurations=" << outcomes.size()
        << " pass_CBB=" << counts[Verdict::kPassCbb] << " pass_CBA=" << counts[Verdict::kPassCba]
        << " pass_both=" << counts[Verdict::kPassBoth] << " fail_count=" << counts[Verdict::kFail]
        << " min_defect=" << fmt(klo) << " max_defect=" << fmt(khi) << "\n";
  }
  ojson s = ctx.header("test");
  s["criterion"] = std::string(to_string(id));
  s["configurations"] = n_conf;
  s["rejected"] = set.rejected;
  s["skipped"] = {{"RightAngleUnavailable", set.skipped}};
  s["fail_count"] = total_fail;
  s["min_defect"] = num(lo);
  s["max_defect"] = num(hi);
  s["results"] = results;
  if (set.skipped > 0)
    out << "skipped: RightAngleUnavailable " << set.skipped << " of " << ctx.cfg.samples << "\n";
  ctx.write("test", csv, s);
  return kOk;
}

int test_first_variation(const Context& ctx, std::ostream& out) {
  const auto& sp = *ctx.space;
  SamplingOptions so;
  so.criteria = ctx.copts;
  auto set = draw_samples(sp, ctx.regions.front(), {CriterionId::kPythagorean}, ctx.cfg.samples,
                          ctx.cfg.seed, so);
  const std::vector<double> steps{1e-2, 1e-3, 1e-4};
  Csv csv({"sample", "t", "distance", "angle", "target", "slope", "error", "min_order", "decaying",
           "multi_geodesic"});
  int count = 0, skipped = 0;
  double max_err = 0;
  bool all_decaying = true;
  for (std::size_t i = 0; i < set.pythagorean.size(); ++i) {
    const auto& m = set.pythagorean[i];
    auto seg = sp.minimal_geodesics(m.r1, m.r2).front();
    Rng rng = make_rng(ctx.cfg.seed, kFirstVariationStream, i);
    double t = (0.1 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng)) * seg.length();
    if (t + steps.front() > seg.length()) {
      ++skipped;
      continue;
    }
    FirstVariationReport r;
    try {
      r = first_variation_check(sp, m.q, seg, t, steps, ctx.copts);
    } catch (const DegenerateError&) {
      ++skipped;
      continue;
    }
    ++count;
    double order = r.orders.empty() ? 0 : *std::min_element(r.orders.begin(), r.orders.end());
    max_err = std::max(max_err, r.errors.back());
    all_decaying = all_decaying && r.decaying;
    csv.row({std::to_string(i), fmt(t), fmt(r.distance), fmt(r.angle), fmt(r.target),
             fmt(r.slopes.back()), fmt(r.errors.back()), fmt(order), r.decaying ? "1" : "0",
             r.multi_geodesic ? "1" : "0"});
  }
  ojson s = ctx.header("test");
  s["criterion"] = "first-variation";
  s["steps"] = steps;
  s["count"] = count;
  s["skipped"] = skipped;
  s["max_error"] = max_err;
  s["all_decaying"] = all_decaying;
  out << "configurations=" << count << " skipped=" << skipped << " max_error=" << fmt(max_err)
      << " all_decaying=" << (all_decaying ? "true" : "false") << "\n";
  ctx.write("test", csv, s);
  return kOk;
}

int test_angle_sum(const Context& ctx, std::ostream& out) {
  const auto& sp = *ctx.space;
  SamplingOptions so;
  so.criteria = ctx.copts;
  auto set = draw_samples(sp, ctx.regions.front(), {CriterionId::kPythagorean}, ctx.cfg.samples,
                          ctx.cfg.seed, so);
  Csv csv({"sample", "t", "angle_to_start", "angle_to_end", "sum", "excess"});
  double max_abs = 0, min_sum = INFINITY;
  int count = 0, skipped = 0;
  for (std::size_t i = 0; i < set.pythagorean.size(); ++i) {
    const auto& m = set.pythagorean[i];
    auto seg = sp.minimal_geodesics(m.r1, m.r2).front();
    AngleSumReport r;
    try {
      r = angle_sum_check(sp, m.q, seg, m.foot.t, ctx.copts);
    } catch (const LadderFailure&) {
      ++skipped;
      continue;
    }
    ++count;
    max_abs = std::max(max_abs, std::abs(r.excess));
    min_sum = std::min(min_sum, r.sum);
    csv.row({std::to_string(i), fmt(r.t), fmt(r.angle_to_start), fmt(r.angle_to_end), fmt(r.sum),
             fmt(r.excess)});
  }
  ojson s = ctx.header("test");
  s["criterion"] = "angle-sum";
  s["count"] = count;
  s["skipped"] = skipped;
  s["max_abs_excess"] = max_abs;
  s["min_sum"] = num(min_sum);
  out << "configurations=" << count << " max_abs_excess=" << fmt(max_abs)
      << " min_sum=" << fmt(min_sum) << "\n";
  ctx.write("test", csv, s);
  return kOk;
}

int test_multiplicity(const Context& ctx, std::ostream& out) {
  const auto& sp = *ctx.space;
  const auto& region = ctx.regions.front();
  Rng rng = make_rng(ctx.cfg.seed, kMultiplicityStream, 0);
  auto rep = geodesic_multiplicity_probe(sp, region.center, region.radius, ctx.cfg.samples, rng);
  Csv csv({"example", "a", "b"});
  for (std::size_t i = 0; i < rep.examples.size(); ++i)
    csv.row({std::to_string(i), fmt(sp.coords(rep.examples[i].first)),
             fmt(sp.coords(rep.examples[i].second))});
  ojson s = ctx.header("test");
  s["criterion"] = "multiplicity";
  s["multiplicity"] = to_json(rep, sp);
  out << "pairs=" << rep.pairs << " multi_pairs=" << rep.multi_pairs << "\n";
  ctx.write("test", csv, s);
  return kOk;
}

int cmd_test(const Context& ctx, std::ostream& out) {
  auto ids = parse_criteria(ctx.cfg.criterion);
  if (ids.size() != 1) throw ConfigError("test runs exactly one criterion");
  switch (ids.front()) {
    case CriterionId::kFirstVariation: return test_first_variation(ctx, out);
    case CriterionId::kAngleSum: return test_angle_sum(ctx, out);
    case CriterionId::kMultiplicity: return test_multiplicity(ctx, out);
    default: return test_verdicts(ctx, ids.front(), out);
  }
}

// --- estimate ------------------------------------------------------------

int cmd_estimate(const Context& ctx, std::ostream& out) {
  const auto& sp = *ctx.space;
  EstimateOptions eo;
  eo.criteria = parse_criteria(ctx.cfg.criterion);
  eo.k_lo = ctx.cfg.k_bracket[0];
  eo.k_hi = ctx.cfg.k_bracket[1];
  eo.resolution = ctx.cfg.resolution;
  eo.n_samples = ctx.cfg.samples;
  eo.seed = ctx.cfg.seed;
  eo.sampling.criteria = ctx.copts;

  Csv csv({"region", "bound", "k", "sample", "criterion", "scale", "defect", "defect_cba",
           "tolerance", "verdict"});
  ojson rows = ojson::array();
  for (std::size_t ri = 0; ri < ctx.regions.size(); ++ri) {
    const auto& region = ctx.regions[ri];
    ojson row;
    row["center"] = sp.coords(region.center);
    try {
      auto set = draw_samples(sp, region, eo.criteria, eo.n_samples, eo.seed, eo.sampling);
      auto est = estimate_bounds(sp, region, set, eo);
      row["estimate"] = to_json(est);
      row["error"] = "";
      out << "region " << ri << ": k_CBB="
          << (est.cbb.value ? fmt(*est.cbb.value) : "none (" + est.cbb.note + ")")
          << " k_CBA=" << (est.cba.value ? fmt(*est.cba.value) : "none (" + est.cba.note + ")")
          << "\n";
      for (auto [name, b] : {std::pair{"k_cbb", &est.cbb}, std::pair{"k_cba", &est.cba}}) {
        if (!b->value) continue;
        auto outcomes = outcomes_at(sp, set, Curvature(*b->value), ctx.copts);
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
          const auto& o = outcomes[i];
          csv.row({std::to_string(ri), name, fmt(*b->value), std::to_string(i),
                   std::string(to_string(o.criterion)), fmt(o.scale), fmt(o.defect),
                   fmt(o.defect_cba), fmt(o.tolerance), std::string(to_string(o.verdict))});
        }
      }
    } catch (const EstimationError& e) {
      row["estimate"] = nullptr;
      row["error"] = e.what();
      out << "region " << ri << ": error: " << e.what() << "\n";
    }
    rows.push_back(row);
  }
  ojson s = ctx.header("estimate");
  s["regions"] = rows;
  ctx.write("estimate", csv, s);
  return kOk;
}

// --- profile -------------------------------------------------------------

int cmd_profile(const Context& ctx, std::ostream& out) {
  const auto& sp = *ctx.space;
  ProfileOptions po;
  po.criteria = ctx.copts;
  po.noise_floor = std::max(1e-12, plane_noise_floor(ctx.cfg.eps, *ctx.cfg.per_eps, ctx.cfg.seed, po));
  Csv csv({"region", "eps", "chi", "attempted", "skipped", "skip_fraction"});
  ojson rows = ojson::array();
  for (std::size_t ri = 0; ri < ctx.regions.size(); ++ri) {
    const auto& region = ctx.regions[ri];
    ojson row;
    row["center"] = sp.coords(region.center);
    try {
      auto p = right_angle_defect_profile(sp, region.center, ctx.cfg.eps, *ctx.cfg.per_eps,
                                        ctx.cfg.seed, po);
      for (std::size_t i = 0; i < p.eps.size(); ++i)
        csv.row({std::to_string(ri), fmt(p.eps[i]), fmt(p.chi[i]), std::to_string(p.attempted[i]),
                 std::to_string(p.skipped[i]), fmt(p.skip_fraction[i])});
      row["profile"] = to_json(p);
      row["error"] = "";
      out << "region " << ri << ": " << to_string(p.classification)
          << " chi_min=" << fmt(p.chi.back()) << (p.valid ? "" : " (invalid: too many skips)")
          << "\n";
    } catch (const Error& e) {
      row["profile"] = nullptr;
      row["error"] = e.what();
      out << "region " << ri << ": error: " << e.what() << "\n";
    }
    rows.push_back(row);
  }
  ojson s = ctx.header("profile");
  s["noise_floor"] = po.noise_floor;
  s["regions"] = rows;
  ctx.write("profile", csv, s);
  return kOk;
}

// --- mesh ----------------------------------------------------------------

double median(std::vector<double> v) {
  if (v.empty()) return NAN;
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int cmd_mesh(const Context& ctx, std::ostream& out) {
  const auto& sp = *ctx.space;
  if (!sp.diagnostic_only()) throw ConfigError("the mesh command needs a mesh space");
  SpacePtr ref;
  if (!ctx.cfg.reference.empty()) ref = load_space(ctx.cfg.reference);
  auto to_ref = [&](const Point& p) {
    auto c = sp.coords(p);
    std::vector<double> xyz(c.end() - 3, c.end());
    try {
      return ref->point_from_coords(xyz);
    } catch (const Error&) {
      return ref->point_from_coords(std::vector<double>(xyz.begin(), xyz.begin() + 2));
    }
  };

  Csv csv({"pair", "a", "b", "graph_distance", "reference_distance", "relative_error"});
  Rng rng = make_rng(ctx.cfg.seed, kMeshPairStream, 0);
  std::vector<double> errors;
  const Point c0 = sp.default_center();
  for (int i = 0; i < ctx.cfg.pairs; ++i) {
    Point a = sp.sample_ball(c0, INFINITY, rng);
    Point b = sp.sample_ball(c0, INFINITY, rng);
    double d = sp.distance(a, b);
    double dr = NAN, rel = NAN;
    if (ref) {
      dr = ref->distance(to_ref(a), to_ref(b));
      if (dr > 1e-9) {
        rel = std::abs(d - dr) / dr;
        errors.push_back(rel);
      }
    }
    csv.row({std::to_string(i), fmt(sp.coords(a)), fmt(sp.coords(b)), fmt(d), fmt(dr), fmt(rel)});
  }

  RegionOptions ro;
  ro.estimate.n_samples = ctx.cfg.samples;
  ro.estimate.seed = ctx.cfg.seed;
  ro.estimate.resolution = ctx.cfg.resolution;
  ro.estimate.k_lo = ctx.cfg.k_bracket[0];
  ro.estimate.k_hi = ctx.cfg.k_bracket[1];
  ro.estimate.criteria = parse_criteria(ctx.cfg.criterion);
  ro.estimate.sampling.criteria = ctx.copts;
  ro.eps_ladder = ctx.cfg.eps;
  ro.n_per_eps = *ctx.cfg.per_eps;
  ro.profile.criteria = ctx.copts;
  ro.multiplicity_pairs = std::min(ctx.cfg.pairs, 200);
  ojson rows = ojson::array();
  for (auto& region : ctx.regions) {
    for (auto& row : region_report(sp, {region.center}, region.radius, ro))
      rows.push_back(to_json(row, sp));
  }

  ojson s = ctx.header("mesh");
  ojson m;
  m["space"] = sp.id();
  m["resolution"] = sp.resolution();
  s["mesh"] = m;
  ojson pairs;
  pairs["count"] = ctx.cfg.pairs;
  pairs["reference"] = ref ? ojson(ref->id()) : ojson(nullptr);
  pairs["compared"] = errors.size();
  pairs["median_relative_error"] = num(median(errors));
  pairs["max_relative_error"] =
      errors.empty() ? ojson(nullptr) : ojson(*std::max_element(errors.begin(), errors.end()));
  s["pairs"] = pairs;
  s["regions"] = rows;
  out << "pairs=" << ctx.cfg.pairs;
  if (ref) out << " median_relative_error=" << fmt(median(errors));
  out << " regions=" << rows.size() << " (diagnostic only)\n";
  ctx.write("mesh", csv, s);
  return kOk;
}

// --- command line --------------------------------------------------------

struct RunFlags {
  std::string config, space, criterion, out, reference;
  std::vector<std::string> regions;
  double k = 0, tol_scale = 1, resolution = 0.01;
  std::vector<double> k_grid, k_bracket, eps;
  int samples = 0, per_eps = 0, pairs = 0, steiner = 0;
  std::uint64_t seed = 0;
  std::map<std::string, CLI::Option*> opt;

  bool given(const std::string& name) const { return opt.at(name)->count() > 0; }
};

void add_run_options(CLI::App* sub, RunFlags& f) {
  f.opt["config"] = sub->add_option("--config", f.config, "JSON run config; flags override it");
  f.opt["space"] = sub->add_option("--space", f.space, "space descriptor JSON or path");
  f.opt["criterion"] = sub->add_option("--criterion", f.criterion, "criterion (comma list for estimate)");
  f.opt["k"] = sub->add_option("--k", f.k, "single test curvature");
  f.opt["k-grid"] = sub->add_option("--k-grid", f.k_grid, "test curvatures")->delimiter(',');
  f.opt["k-bracket"] = sub->add_option("--k-bracket", f.k_bracket, "lo,hi for estimate")->delimiter(',');
  f.opt["region"] = sub->add_option("--region", f.regions, "center=x,y,...,radius=r (repeatable)");
  f.opt["samples"] = sub->add_option("--samples", f.samples, "sampled configurations");
  f.opt["seed"] = sub->add_option("--seed", f.seed, "random seed");
  f.opt["out"] = sub->add_option("--out", f.out, "output directory");
  f.opt["steiner"] = sub->add_option("--steiner", f.steiner, "Steiner points per mesh edge");
  f.opt["tol-scale"] = sub->add_option("--tol-scale", f.tol_scale, "verdict tolerance multiplier");
  f.opt["resolution"] = sub->add_option("--resolution", f.resolution, "bisection resolution in k");
  f.opt["eps"] = sub->add_option("--eps", f.eps, "profile ladder, decreasing")->delimiter(',');
  f.opt["per-eps"] = sub->add_option("--per-eps", f.per_eps, "profile configurations per level");
  f.opt["reference"] = sub->add_option("--reference", f.reference, "mesh: analytic reference space");
  f.opt["pairs"] = sub->add_option("--pairs", f.pairs, "mesh: distance pairs");
}

RunConfig resolve(const RunFlags& f) {
  RunConfig cfg;
  if (f.given("config")) {
    std::ifstream in(f.config);
    if (!in) throw IoError("cannot read config " + f.config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config " + f.config + " is not valid JSON: " + e.what());
    }
    apply_json(cfg, j);
  }
  if (f.given("space")) cfg.space = f.space;
  if (f.given("criterion")) cfg.criterion = f.criterion;
  if (f.given("k")) cfg.k_grid = {f.k};
  if (f.given("k-grid")) cfg.k_grid = f.k_grid;
  if (f.given("k-bracket")) cfg.k_bracket = f.k_bracket;
  if (f.given("region")) {
    cfg.regions.clear();
    for (auto& r : f.regions) cfg.regions.push_back(parse_region(r));
  }
  if (f.given("samples")) cfg.samples = f.samples;
  if (f.given("seed")) cfg.seed = f.seed;
  if (f.given("out")) cfg.out = f.out;
  if (f.given("steiner")) cfg.steiner = f.steiner;
  if (f.given("tol-scale")) cfg.tol_scale = f.tol_scale;
  if (f.given("resolution")) cfg.resolution = f.resolution;
  if (f.given("eps")) cfg.eps = f.eps;
  if (f.given("per-eps")) cfg.per_eps = f.per_eps;
  if (f.given("reference")) cfg.reference = f.reference;
  if (f.given("pairs")) cfg.pairs = f.pairs;
  return cfg;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  configure_logging();
  CLI::App app{"cmpk: curvature-comparison tests on metric spaces"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string what;
  double k_model = 0;
  std::vector<double> sides, legs;
  double gamma = 0;
  auto* model = app.add_subcommand("model", "model-space trigonometry queries");
  model->add_option("what", what, "angle | side | triangle")
      ->required()
      ->check(CLI::IsMember({"angle", "side", "triangle"}));
  model->add_option("--k", k_model, "model curvature")->required();
  model->add_option("--sides", sides, "a,b,c")->delimiter(',');
  model->add_option("--legs", legs, "a,b")->delimiter(',');
  auto* gamma_opt = model->add_option("--gamma", gamma, "included angle (radians)");

  // Exactly one subcommand runs; each has its own flag storage.
  std::map<std::string, RunFlags> flags;
  std::map<std::string, CLI::App*> commands;
  for (auto [name, help] : {std::pair{"test", "run one criterion over sampled configurations"},
                            std::pair{"estimate", "bisect curvature bounds on a fixed sample"},
                            std::pair{"profile", "right-angle defect profile across scales"},
                            std::pair{"mesh", "mesh distance diagnostics and region rows"}}) {
    commands[name] = app.add_subcommand(name, help);
    add_run_options(commands[name], flags[name]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (model->parsed())
      return cmd_model(what, k_model, sides, legs,
                       gamma_opt->count() ? std::optional<double>(gamma) : std::nullopt, out);
    for (auto& [name, sub] : commands) {
      if (!sub->parsed()) continue;
      RunConfig cfg = resolve(flags.at(name));
      if (!cfg.per_eps) cfg.per_eps = name == "mesh" ? 64 : 1024;
      Context ctx = make_context(std::move(cfg));
      if (name == "test") return cmd_test(ctx, out);
      if (name == "estimate") return cmd_estimate(ctx, out);
      if (name == "profile") return cmd_profile(ctx, out);
      return cmd_mesh(ctx, out);
    }
    return kConfigError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const SpaceError& e) {
    err << "error: " << e.what() << "\n";
    return kSpaceError;
  } catch (const MeshError& e) {
    err << "error: " << e.what() << "\n";
    return kSpaceError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
}

}  // namespace cmpk::cli
