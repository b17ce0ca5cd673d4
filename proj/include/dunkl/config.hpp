#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include "dunkl/json_io.hpp"

namespace dunkl {

/// Invalid or missing configuration; maps to process exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double half = 12.0;
  int panels = 36;
  int nodes_per_panel = 8;
};

/// Single JSON document; seed is mandatory so suite runs are reproducible.
struct Config {
  std::uint64_t seed = 0;
  int level = 1;                   // quadrature resolution multiplier
  GridSpec grid;                   // spatial box for transform-based suites
  int poly_trials = 10;            // random polynomials per (rs, k) pair
  int poly_degree = 8;             // max degree of random polynomials
  int intertwiner_degree = 6;      // verified degree range for V
  int kernel_n = 30;               // kernel series truncation
  std::map<std::string, double> tolerances;
  std::string out;                 // report output path ("" = stdout)
  Json raw;                        // full document for suite-specific keys

  double tolerance(const std::string& key, double fallback) const {
    auto it = tolerances.find(key);
    return it == tolerances.end() ? fallback : it->second;
  }
};

inline GridSpec grid_from_json(const Json& j, GridSpec base) {
  if (j.contains("half")) base.half = j.at("half").get<double>();
  if (j.contains("panels")) base.panels = j.at("panels").get<int>();
  if (j.contains("nodes_per_panel")) base.nodes_per_panel = j.at("nodes_per_panel").get<int>();
  return base;
}

inline void validate(const Config& c) {
  if (c.level < 1 || c.level > 8) throw ConfigError("level must be in [1, 8]");
  if (c.grid.half <= 0) throw ConfigError("grid.half must be positive");
  if (c.grid.panels < 8) throw ConfigError("grid.panels below the minimum of 8");
  if (c.grid.nodes_per_panel < 4)
    throw ConfigError("grid.nodes_per_panel below the minimum of 4");
  if (c.poly_trials < 1) throw ConfigError("poly_trials must be positive");
  if (c.poly_degree < 1 || c.poly_degree > 16) throw ConfigError("poly_degree must be in [1, 16]");
  if (c.intertwiner_degree < 1 || c.intertwiner_degree > 16)
    throw ConfigError("intertwiner_degree must be in [1, 16]");
  if (c.kernel_n < 1 || c.kernel_n > 60) throw ConfigError("kernel_n must be in [1, 60]");
  for (const auto& [key, tol] : c.tolerances)
    if (!(tol > 0)) throw ConfigError("tolerance '" + key + "' must be positive");
}

inline Config parse_config(const Json& j) {
  Config c;
  if (!j.contains("seed")) throw ConfigError("config: 'seed' is mandatory");
  try {
    c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("level")) c.level = j.at("level").get<int>();
    if (j.contains("grid")) c.grid = grid_from_json(j.at("grid"), c.grid);
    if (j.contains("poly_trials")) c.poly_trials = j.at("poly_trials").get<int>();
    if (j.contains("poly_degree")) c.poly_degree = j.at("poly_degree").get<int>();
    if (j.contains("intertwiner_degree"))
      c.intertwiner_degree = j.at("intertwiner_degree").get<int>();
    if (j.contains("kernel_n")) c.kernel_n = j.at("kernel_n").get<int>();
    if (j.contains("tolerances"))
      for (const auto& [key, v] : j.at("tolerances").items())
        c.tolerances[key] = v.get<double>();
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.raw = j;
  validate(c);
  return c;
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

}  // namespace dunkl
