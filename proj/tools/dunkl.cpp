#include <CLI11.hpp>
#include <Eigen/Core>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitInternalError = 3;

std::vector<double> parse_point(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw dunkl::ConfigError("cannot parse coordinate: " + tok);
    }
  }
  if (out.empty()) throw dunkl::ConfigError("empty point");
  return out;
}

std::pair<dunkl::RootSystem, dunkl::Multiplicity> context_from_config(const dunkl::Config& cfg) {
  std::string name = "rank1";
  std::string k = "1";
  if (cfg.raw.contains("root_system")) name = cfg.raw.at("root_system").get<std::string>();
  if (cfg.raw.contains("k")) {
    const auto& kj = cfg.raw.at("k");
    k = kj.is_string() ? kj.get<std::string>() : dunkl::Json(kj).dump();
  }
  dunkl::RootSystem rs;
  try {
    rs = dunkl::make_root_system(name);
  } catch (const std::invalid_argument& e) {
    throw dunkl::ConfigError(e.what());
  }
  dunkl::Rational kv = dunkl::rational_from_string(k);
  if (kv < 0) throw dunkl::ConfigError("k must be nonnegative");
  return {rs, dunkl::Multiplicity::uniform(rs, kv)};
}

void emit(const dunkl::Config& cfg, const std::string& out_flag, const std::string& text) {
  std::string path = out_flag.empty() ? cfg.out : out_flag;
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Dunkl calculus verification harness"};
  app.require_subcommand(1);

  std::string config_path, out_path, suite, kind, what, point_str, spectral_str;
  std::optional<std::uint64_t> seed_flag;
  std::optional<int> level_flag;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config path")->required();
    cmd->add_option("--out", out_path, "output path (overrides config 'out')");
    cmd->add_option("--seed", seed_flag, "override config seed");
    cmd->add_option("--level", level_flag, "override config quadrature level");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "poly|transform|supports|parametrix|sobolev|riesz|all")
      ->required();
  add_common(verify);

  CLI::App* table = app.add_subcommand("table", "emit a convergence table (CSV)");
  table->add_option("kind", kind, "mehta_convergence|plancherel_convergence|kernel_truncation")
      ->required();
  add_common(table);

  CLI::App* eval = app.add_subcommand("eval", "evaluate the kernel or the transform at a point");
  eval->add_option("what", what, "kernel|transform")->required();
  add_common(eval);
  eval->add_option("--point", point_str, "comma-separated coordinates")->required();
  eval->add_option("--spectral", spectral_str,
                   "comma-separated spectral argument (kernel: lambda; transform: xi)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  if (const char* threads = std::getenv("DUNKL_THREADS")) {
    int n = std::atoi(threads);
    if (n > 0) Eigen::setNbThreads(n);
  }

  try {
    dunkl::Config cfg = dunkl::load_config(config_path);
    if (seed_flag) cfg.seed = *seed_flag;
    if (level_flag) {
      cfg.level = *level_flag;
      dunkl::validate(cfg);
    }

    if (*verify) {
      dunkl::SuiteReport rep = dunkl::run_suite(suite, cfg);
      emit(cfg, out_path, dunkl::to_json(rep).dump(2) + "\n");
      for (const auto& r : rep.records)
        if (!r.pass)
          std::cerr << "FAIL " << r.id << ": measured " << r.measured << " > tolerance "
                    << r.tolerance << "\n";
      return rep.overall() ? kExitPass : kExitCheckFailure;
    }
    if (*table) {
      dunkl::Table t = dunkl::emit_table(kind, cfg);
      emit(cfg, out_path, dunkl::to_csv(t));
      if (!t.monotone_ok) std::cerr << "warning: expected error decrease violated\n";
      return kExitPass;
    }
    if (*eval) {
      auto [rs, k] = context_from_config(cfg);
      std::vector<double> pt = parse_point(point_str);
      if (static_cast<int>(pt.size()) != rs.ambient_dim)
        throw dunkl::ConfigError("--point dimension does not match the root system");
      Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(pt.data(), pt.size());
      dunkl::Json out;
      if (what == "kernel") {
        std::vector<double> lam =
            spectral_str.empty() ? std::vector<double>(pt.size(), 1.0) : parse_point(spectral_str);
        if (lam.size() != pt.size())
          throw dunkl::ConfigError("--spectral dimension does not match --point");
        Eigen::VectorXcd lambda(lam.size());
        for (size_t i = 0; i < lam.size(); ++i) lambda(i) = lam[i];
        auto ev = dunkl::KernelEvaluator::automatic(rs, k, cfg.kernel_n);
        dunkl::Complex v = ev(lambda, x);
        out["kernel"] = {{"value", {v.real(), v.imag()}},
                         {"error_bound", ev.error_bound(lambda.norm(), x.norm())}};
      } else if (what == "transform") {
        // transform of the standard Gaussian evaluated at the given frequency
        // point, by direct quadrature against the kernel
        dunkl::Grid g = dunkl::box_grid(rs, k, cfg.grid.half, cfg.grid.panels,
                                        cfg.grid.nodes_per_panel);
        auto ev = dunkl::KernelEvaluator::automatic(rs, k, cfg.kernel_n);
        double ck = dunkl::mehta_constant(rs, k, cfg.level);
        Eigen::VectorXcd lam = dunkl::Complex(0, -1) * x.cast<dunkl::Complex>();
        std::vector<dunkl::Complex> t(g.size());
        for (size_t i = 0; i < g.size(); ++i)
          t[i] = ev(lam, g.nodes[i]) * std::exp(-0.5 * g.nodes[i].squaredNorm()) * g.weights[i];
        dunkl::Complex direct = dunkl::pairwise_sum(t) / ck;
        out["transform"] = {{"function", "gaussian"},
                            {"value", {direct.real(), direct.imag()}}};
      } else {
        throw dunkl::ConfigError("eval expects 'kernel' or 'transform'");
      }
      emit(cfg, out_path, out.dump(2) + "\n");
      return kExitPass;
    }
  } catch (const dunkl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInternalError;
}
