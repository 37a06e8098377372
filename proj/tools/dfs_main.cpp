// SPDX-License-Identifier: MIT
//
// Command-line front end: inspect manifolds, approximate catalog functions,
// run convergence studies, and execute the verification battery.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dfs/analysis.hpp"
#include "dfs/battery.hpp"
#include "dfs/catalog.hpp"
#include "dfs/fourier.hpp"
#include "dfs/grid.hpp"
#include "dfs/io.hpp"
#include "dfs/manifold.hpp"

namespace {

using dfs::AmbientPoint;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;    // verification battery reported failures
constexpr int kExitConfig = 2;  // bad flags, names, or preconditions
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

struct RunConfig {
  std::string command;
  std::string manifold;
  std::map<std::string, std::string> params;
  std::string function_id = "one";
  int degree = 16;
  std::vector<int> degrees;
  int grid_override = 0;
  std::string shape = "circular";
  std::uint64_t seed = dfs::kDefaultSeed;
  std::string out;
  int eval_points = 200;
};

dfs::SumShape parse_shape(const std::string& s) {
  if (s == "circular") return dfs::SumShape::kCircular;
  if (s == "rectangular") return dfs::SumShape::kRectangular;
  throw std::invalid_argument("shape must be circular or rectangular");
}

json interval_json(const dfs::CoordInterval& iv) {
  if (iv.full) return json{{"full_circle", true}};
  return json{{"lo", iv.lo},
              {"hi", iv.hi},
              {"lo_closed", iv.lo_closed},
              {"hi_closed", iv.hi_closed}};
}

json manifold_report(const dfs::DfsTransform& t) {
  json doc;
  doc["name"] = t.name();
  doc["d"] = t.dim();
  doc["dprime"] = t.ambient_dim();
  doc["p"] = t.group().size();
  json gens = json::array();
  for (const auto& g : t.group().generators()) {
    json shift = json::array(), signs = json::array();
    for (int j = 0; j < g.dim(); ++j) {
      shift.push_back(g.half_turn[static_cast<std::size_t>(j)] ? std::numbers::pi : 0.0);
      signs.push_back(static_cast<int>(g.signs[static_cast<std::size_t>(j)]));
    }
    gens.push_back(json{{"shift", shift}, {"signs", signs}});
  }
  doc["generators"] = gens;
  json d1 = json::array();
  for (const auto& iv : t.domain().d1) d1.push_back(interval_json(iv));
  doc["d1"] = d1;
  json d2 = json::array();
  for (const auto& rep : t.domain().d2_representatives()) d2.push_back(rep.coords());
  doc["d2_representatives"] = d2;
  doc["omega"] = t.omega_description();
  return doc;
}

json battery_json(const std::string& manifold,
                  const std::vector<dfs::PropertyResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json item{{"manifold", manifold},
              {"property", r.property},
              {"residual", r.residual},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
    if (!r.note.empty()) item["note"] = r.note;
    arr.push_back(item);
  }
  return arr;
}

int run_info(const RunConfig& cfg) {
  const auto t = dfs::make_manifold(cfg.manifold, cfg.params);
  std::cout << manifold_report(*t).dump(2) << "\n";
  return kExitOk;
}

int run_approx(const RunConfig& cfg) {
  const auto t = dfs::make_manifold(cfg.manifold, cfg.params);
  const dfs::TestFunction f = dfs::catalog_function(t, cfg.function_id);
  const int h = cfg.degree;
  const dfs::GridSpec grid = cfg.grid_override > 0
                                 ? dfs::GridSpec::uniform(t->dim(), cfg.grid_override)
                                 : dfs::GridSpec::for_degree(t->dim(), h);
  const dfs::SampleTensor tensor = dfs::sample_dfs(*t, f.fn, grid);
  const dfs::CoefficientTable table = dfs::coefficients(tensor);
  const dfs::IndexSet omega = parse_shape(cfg.shape) == dfs::SumShape::kCircular
                                  ? dfs::circular_index_set(*t, h)
                                  : dfs::rectangular_index_set(*t, h);
  const dfs::DfsPartialSum sum(*t, table, omega);

  dfs::EvalPointOptions opts;
  opts.random_count = cfg.eval_points;
  opts.fine_scan = false;
  opts.seed = cfg.seed;
  const std::vector<AmbientPoint> points = dfs::evaluation_points(*t, opts);
  std::vector<std::complex<double>> fv(points.size()), sv(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    fv[i] = f.fn(points[i]);
    sv[i] = sum(points[i]);
    if (!std::isfinite(sv[i].real()) || !std::isfinite(sv[i].imag()))
      throw std::runtime_error("approx: non-finite partial sum value");
  }
  dfs::write_text_atomic(cfg.out + ".coefficients.json",
                         dfs::coefficient_file_text(*t, grid, table));
  dfs::write_text_atomic(cfg.out + ".evaluation.csv",
                         dfs::evaluation_csv(points, fv, sv));
  std::cout << json{{"coefficients", cfg.out + ".coefficients.json"},
                    {"evaluation", cfg.out + ".evaluation.csv"},
                    {"indices", omega.size()}}
                   .dump(2)
            << "\n";
  return kExitOk;
}

int run_convergence(const RunConfig& cfg) {
  if (cfg.degrees.size() < 3)
    throw std::invalid_argument("convergence needs at least 3 degrees");
  const auto t = dfs::make_manifold(cfg.manifold, cfg.params);
  const dfs::TestFunction f = dfs::catalog_function(t, cfg.function_id);

  dfs::StudyOptions opts;
  opts.eval.seed = cfg.seed;
  opts.shape = parse_shape(cfg.shape);
  opts.cls = f.cls;
  opts.norm_upper_bound = f.norm_upper_bound;
  dfs::ConvergenceRecord record =
      dfs::convergence_study(*t, f.fn, cfg.degrees, opts);
  record.function_label = f.id;

  for (const auto& row : record.rows)
    if (!std::isfinite(row.sup_error))
      throw std::runtime_error("convergence: non-finite sup error");

  json rates;
  try {
    const dfs::RateFit fit = dfs::fit_rate(record);
    rates = json{{"slope", fit.slope},
                 {"intercept", fit.intercept},
                 {"r_squared", fit.r_squared},
                 {"degenerate", false}};
  } catch (const std::invalid_argument&) {
    rates = json{{"slope", nullptr},
                 {"intercept", nullptr},
                 {"r_squared", nullptr},
                 {"degenerate", true}};
  }
  if (f.cls && 2.0 * (f.cls->k + f.cls->alpha) > t->dim())
    rates["theoretical_rate"] =
        dfs::theoretical_rate(t->dim(), f.cls->k, f.cls->alpha);
  else
    rates["theoretical_rate"] = nullptr;

  dfs::write_text_atomic(cfg.out + ".convergence.csv", dfs::convergence_csv(record));
  dfs::write_text_atomic(cfg.out + ".rates.json", rates.dump(2) + "\n");
  std::cout << rates.dump(2) << "\n";
  return kExitOk;
}

int run_verify(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.manifold == "all")
    names = dfs::registered_manifold_names();
  else
    names.push_back(cfg.manifold);

  json report = json::array();
  bool ok = true;
  for (const auto& name : names) {
    const auto t = dfs::make_manifold(name, cfg.params);
    dfs::BatteryOptions opts;
    opts.seed = cfg.seed;
    const auto results = dfs::run_battery(t, opts);
    ok = ok && dfs::all_pass(results);
    for (auto& item : battery_json(name, results)) report.push_back(item);
  }
  const std::string text = report.dump(2) + "\n";
  if (!cfg.out.empty()) dfs::write_text_atomic(cfg.out, text);
  std::cout << text;
  return ok ? kExitOk : kExitFail;
}

void apply_config_file(CLI::App& app, RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dfs::IoError("cannot open config file " + path);
  json doc;
  in >> doc;
  const auto unset = [&](const std::string& flag) {
    const CLI::Option* opt = app.get_option("--" + flag);
    return opt->count() == 0;
  };
  if (doc.contains("manifold") && unset("manifold"))
    cfg.manifold = doc["manifold"].get<std::string>();
  if (doc.contains("function") && unset("function"))
    cfg.function_id = doc["function"].get<std::string>();
  if (doc.contains("degree") && unset("degree")) cfg.degree = doc["degree"].get<int>();
  if (doc.contains("degrees") && unset("degrees"))
    cfg.degrees = doc["degrees"].get<std::vector<int>>();
  if (doc.contains("grid") && unset("grid")) cfg.grid_override = doc["grid"].get<int>();
  if (doc.contains("shape") && unset("shape")) cfg.shape = doc["shape"].get<std::string>();
  if (doc.contains("seed") && unset("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("out") && unset("out")) cfg.out = doc["out"].get<std::string>();
  if (doc.contains("param")) {
    for (const auto& [k, v] : doc["param"].items())
      if (!cfg.params.count(k)) cfg.params[k] = v.get<std::string>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier approximation on manifolds via torus transforms"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> raw_params;
  std::string config_path;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--manifold", cfg.manifold, "manifold name");
    sub->add_option("--param", raw_params, "manifold parameter k=v")->take_all();
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--out", cfg.out, "output path or prefix");
    sub->add_option("--config", config_path, "JSON config file");
    return sub;
  };

  CLI::App* info = add_common(app.add_subcommand("info", "describe a manifold"));
  CLI::App* approx =
      add_common(app.add_subcommand("approx", "approximate a catalog function"));
  approx->add_option("--function", cfg.function_id, "catalog function id");
  approx->add_option("--degree", cfg.degree, "truncation degree h");
  approx->add_option("--grid", cfg.grid_override, "grid size override per coordinate");
  approx->add_option("--shape", cfg.shape, "circular|rectangular");
  approx->add_option("--points", cfg.eval_points, "number of evaluation points");
  CLI::App* conv =
      add_common(app.add_subcommand("convergence", "sup-error decay study"));
  conv->add_option("--function", cfg.function_id, "catalog function id");
  conv->add_option("--degrees", cfg.degrees, "list of degrees h")->delimiter(',');
  conv->add_option("--grid", cfg.grid_override, "grid size override per coordinate");
  conv->add_option("--shape", cfg.shape, "circular|rectangular");
  CLI::App* verify =
      add_common(app.add_subcommand("verify", "run the verification battery"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) apply_config_file(*sub, cfg, config_path);
    for (const auto& kv : raw_params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--param expects k=v, got '" + kv + "'");
      cfg.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (cfg.manifold.empty())
      throw std::invalid_argument("--manifold is required");

    if (sub == info) return run_info(cfg);
    if (sub == approx) {
      if (cfg.out.empty()) cfg.out = "approx_out";
      return run_approx(cfg);
    }
    if (sub == conv) {
      if (cfg.out.empty()) cfg.out = "convergence_out";
      return run_convergence(cfg);
    }
    if (sub == verify) return run_verify(cfg);
    return kExitConfig;
  } catch (const dfs::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
