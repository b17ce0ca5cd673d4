#pragma once

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dunkl/config.hpp"
#include "dunkl/elliptic.hpp"
#include "dunkl/intertwiner.hpp"
#include "dunkl/json_io.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/schwartz.hpp"
#include "dunkl/tensor_plan.hpp"

namespace dunkl {

struct CheckRecord {
  std::string id;
  Json params;
  double measured;
  double tolerance;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> records;

  bool overall() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
};

inline Json to_json(const SuiteReport& rep) {
  Json j;
  j["suite"] = rep.suite;
  Json recs = Json::array();
  for (const auto& r : rep.records) {
    Json e;
    e["check"] = r.id;
    e["params"] = r.params;
    e["measured"] = r.measured;
    e["tolerance"] = r.tolerance;
    e["pass"] = r.pass;
    recs.push_back(e);
  }
  j["records"] = recs;
  j["pass"] = rep.overall();
  return j;
}

namespace detail {

inline void add_check(SuiteReport& rep, std::string id, Json params, double measured,
                      double tolerance) {
  bool pass = std::isfinite(measured) && measured <= tolerance;
  rep.records.push_back({std::move(id), std::move(params), measured, tolerance, pass});
}

/// Engine-output based draws: uniform_int_distribution is not specified
/// bit-for-bit across standard libraries, and reports must be reproducible.
inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Poly random_poly(std::mt19937_64& rng, int dim, int deg_max, int terms = 8) {
  Poly p(dim);
  for (int t = 0; t < terms; ++t) {
    Monomial m(dim, 0);
    int deg = static_cast<int>(rand_int(rng, 0, deg_max));
    for (int d = 0; d < deg; ++d) ++m[rand_int(rng, 0, dim - 1)];
    Rational c(rand_int(rng, -9, 9));
    if (c == 0) c = 1;
    p = p + Poly::monomial(dim, m, c);
  }
  return p;
}

inline RatVec random_direction(std::mt19937_64& rng, int dim) {
  RatVec v(dim, Rational(0));
  bool nonzero = false;
  for (int i = 0; i < dim; ++i) {
    v[i] = Rational(rand_int(rng, -3, 3));
    if (v[i] != 0) nonzero = true;
  }
  if (!nonzero) v[0] = 1;
  return v;
}

inline PolyGaussian random_gaussian_type(std::mt19937_64& rng, int dim) {
  Poly p = random_poly(rng, dim, 2, 4);
  if (p.is_zero()) p = Poly::constant(dim, 1);
  Rational a = Rational(rand_int(rng, 1, 4), 2);  // {1/2, 1, 3/2, 2}
  return {p, a};
}

struct NamedSystem {
  std::string name;
  RootSystem rs;
};

inline std::vector<NamedSystem> standard_systems() {
  return {{"rank1", RootSystem::rank1()},
          {"A(1)", make_root_system("A(1)")},
          {"A(2)", make_root_system("A(2)")}};
}

/// Polynomial bump (1 - |x - c|^2 / r^2)_+^10: compactly supported with fast
/// enough Fourier decay that spectral translation keeps leakage tiny.
inline auto poly_bump(const Eigen::VectorXd& center, double radius) {
  return [center, radius](const Eigen::VectorXd& x) {
    double r2 = (x - center).squaredNorm() / (radius * radius);
    return r2 < 1.0 ? std::pow(1.0 - r2, 10) : 0.0;
  };
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

inline SuiteReport run_poly_suite(const Config& cfg) {
  SuiteReport rep{"poly", {}};
  std::mt19937_64 rng(cfg.seed);
  RatVec kset{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  for (const auto& [name, rs] : detail::standard_systems()) {
    for (const auto& kv : kset) {
      Multiplicity k = Multiplicity::uniform(rs, kv);
      Json params{{"root_system", name}, {"k", rational_to_string(kv)}};
      int bad_commute = 0;
      for (int t = 0; t < cfg.poly_trials; ++t) {
        Poly q = detail::random_poly(rng, rs.ambient_dim, cfg.poly_degree);
        RatVec xi = detail::random_direction(rng, rs.ambient_dim);
        RatVec eta = detail::random_direction(rng, rs.ambient_dim);
        Poly lhs = dunkl_T(rs, k, xi, dunkl_T(rs, k, eta, q));
        Poly rhs = dunkl_T(rs, k, eta, dunkl_T(rs, k, xi, q));
        if (!(lhs - rhs).is_zero()) ++bad_commute;
      }
      params["trials"] = cfg.poly_trials;
      detail::add_check(rep, "poly.commute." + name, params, bad_commute, 0.0);

      GradedLinearMap v = build_intertwiner(rs, k, cfg.intertwiner_degree);
      int bad = 0;
      if (!(v.apply(Poly::constant(rs.ambient_dim, 1)) - Poly::constant(rs.ambient_dim, 1))
               .is_zero())
        ++bad;
      detail::add_check(rep, "poly.intertwiner.unit." + name, params, bad, 0.0);
      bad = 0;
      for (int n = 1; n <= cfg.intertwiner_degree; ++n) {
        Poly p = detail::random_poly(rng, rs.ambient_dim, n);
        RatVec xi = detail::random_direction(rng, rs.ambient_dim);
        Poly lhs = dunkl_T(rs, k, xi, v.apply(p));
        Poly rhs = v.apply(p.derivative(xi));
        if (!(lhs - rhs).is_zero()) ++bad;
        // degree preservation on the homogeneous part
        Poly h = p.homogeneous_part(p.degree());
        Poly vh = v.apply(h);
        if (!vh.is_zero() && !(vh - vh.homogeneous_part(p.degree())).is_zero()) ++bad;
      }
      detail::add_check(rep, "poly.intertwiner.commutes." + name, params, bad, 0.0);
    }
  }
  return rep;
}

inline SuiteReport run_transform_suite(const Config& cfg) {
  SuiteReport rep{"transform", {}};
  std::mt19937_64 rng(cfg.seed);
  RatVec kset{Rational(0), Rational(1, 2), Rational(1)};
  for (const auto& [name, rs] : detail::standard_systems()) {
    for (const auto& kv : kset) {
      Multiplicity k = Multiplicity::uniform(rs, kv);
      double numeric = mehta_constant(rs, k, cfg.level);
      double oracle = mehta_closed_form(rs, k);
      Json params{{"root_system", name}, {"k", rational_to_string(kv)}};
      detail::add_check(rep, "transform.mehta." + name, params,
                        std::abs(numeric - oracle) / oracle,
                        cfg.tolerance("mehta", 1e-6));
    }
  }
  for (const auto& [name, rs] : detail::standard_systems()) {
    if (name == "A(2)") continue;  // roots not pairwise orthogonal
    for (const Rational& kv : RatVec{Rational(0), Rational(1)}) {
      Multiplicity k = Multiplicity::uniform(rs, kv);
      TensorPlan plan(rs, k, cfg.grid.half, cfg.grid.panels, cfg.grid.nodes_per_panel);
      double worst = 0;
      for (int t = 0; t < 10; ++t) {
        PolyGaussian f = detail::random_gaussian_type(rng, rs.ambient_dim);
        auto fg = sample(plan.grid(), [&](const Eigen::VectorXd& x) { return f.eval(x); });
        double a = plan.l2(fg);
        double b = plan.freq_l2(plan.forward(fg));
        worst = std::max(worst, std::abs(a - b) / a);
      }
      Json params{{"root_system", name}, {"k", rational_to_string(kv)}, {"functions", 10}};
      detail::add_check(rep, "transform.plancherel." + name, params, worst,
                        cfg.tolerance("plancherel", 1e-3));
    }
  }
  {
    // applying the transform twice reflects the argument
    auto rs = RootSystem::rank1();
    Multiplicity k = Multiplicity::uniform(rs, 1);
    TensorPlan plan(rs, k, cfg.grid.half, cfg.grid.panels, cfg.grid.nodes_per_panel);
    PolyGaussian f = detail::random_gaussian_type(rng, 1);
    auto fg = sample(plan.grid(), [&](const Eigen::VectorXd& x) { return f.eval(x); });
    auto ff = plan.forward(plan.forward(fg));
    const Eigen::Index n = fg.size();
    double err = 0, scale = fg.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i)
      err = std::max(err, std::abs(ff(i) - fg(n - 1 - i)));
    detail::add_check(rep, "transform.double_reflects", Json{{"root_system", "rank1"}, {"k", "1"}},
                      err / scale, cfg.tolerance("double_transform", 1e-4));
  }
  {
    // k = 0 Gaussian self-duality
    auto rs = RootSystem::rank1();
    Multiplicity k = Multiplicity::uniform(rs, 0);
    TensorPlan plan(rs, k, cfg.grid.half, cfg.grid.panels, cfg.grid.nodes_per_panel);
    auto fg = sample(plan.grid(),
                     [](const Eigen::VectorXd& x) { return std::exp(-0.5 * x.squaredNorm()); });
    double err = (plan.forward(fg) - fg).cwiseAbs().maxCoeff();
    detail::add_check(rep, "transform.gaussian_selfdual_k0", Json{{"k", "0"}}, err,
                      cfg.tolerance("selfdual", 1e-6));
  }
  return rep;
}

inline SuiteReport run_supports_suite(const Config& cfg) {
  SuiteReport rep{"supports", {}};
  double tol = cfg.tolerance("support", 1e-4);
  {
    // rank-1, k = 1: bump in the unit ball translated by x = 2. The frequency
    // box is much larger than the spatial box: the sharp bump needs frequency
    // content far beyond the measurement region.
    auto rs = RootSystem::rank1();
    Multiplicity k = Multiplicity::uniform(rs, 1);
    TensorPlan plan(rs, k, TensorPlan::Box{6.0, 120, 10}, TensorPlan::Box{120.0, 240, 10});
    const Grid& g = plan.grid();
    auto f = sample(g, detail::poly_bump(Eigen::VectorXd::Zero(1), 1.0));
    Eigen::VectorXd x(1);
    x << 2.0;
    auto tf = plan.translate(x, f);
    auto w = weyl_elements(rs);
    auto r = verify_translation_support(g, tf, w, x, 1.0, g.spacing, tol);
    detail::add_check(rep, "supports.translation.rank1",
                      Json{{"k", "1"}, {"x", 2.0}, {"radius", 1.0}, {"delta", g.spacing}},
                      r.outside_mass_ratio, tol);
  }
  {
    // k = 0 reduction: the same translation is an ordinary shift
    auto rs = RootSystem::rank1();
    Multiplicity k = Multiplicity::uniform(rs, 0);
    TensorPlan plan(rs, k, TensorPlan::Box{6.0, 120, 10}, TensorPlan::Box{120.0, 240, 10});
    const Grid& g = plan.grid();
    auto f = sample(g, detail::poly_bump(Eigen::VectorXd::Zero(1), 1.0));
    Eigen::VectorXd x(1);
    x << 2.0;
    auto tf = plan.translate(x, f);
    std::vector<GroupElement> trivial{weyl_elements(rs)[0]};
    auto r = verify_translation_support(g, tf, trivial, x, 1.0, g.spacing, tol);
    detail::add_check(rep, "supports.translation.classical",
                      Json{{"k", "0"}, {"x", 2.0}, {"radius", 1.0}}, r.outside_mass_ratio, tol);
  }
  {
    // A(1) convolution: ball bound and convex-hull bound
    auto rs = make_root_system("A(1)");
    Multiplicity k = Multiplicity::uniform(rs, 1);
    TensorPlan plan(rs, k, TensorPlan::Box{6.0, 60, 10}, TensorPlan::Box{36.0, 90, 10});
    const Grid& g = plan.grid();
    Eigen::VectorXd c(2);
    c << 1.5, 0.5;
    auto f = sample(g, detail::poly_bump(Eigen::VectorXd::Zero(2), 1.0));
    auto h = sample(g, detail::poly_bump(c, 0.5));
    auto conv = plan.convolve(f, h);
    auto w = weyl_elements(rs);
    Json params{{"root_system", "A(1)"}, {"k", "1"}, {"f_radius", 1.0},
                {"g_center", {1.5, 0.5}}, {"g_radius", 0.5}};
    auto rb = verify_convolution_support(g, conv, w, c, 0.5, 1.0, g.spacing, tol);
    detail::add_check(rep, "supports.convolution.ball", params, rb.outside_mass_ratio, tol);
    auto rh = verify_convolution_support_hull(g, conv, w, Eigen::VectorXd::Zero(2), 1.0, c, 0.5,
                                              g.spacing, tol);
    detail::add_check(rep, "supports.convolution.hull", params, rh.outside_mass_ratio, tol);
  }
  return rep;
}

namespace detail {

/// Shared setup for the parametrix/regularity suites: rank-1, k = 1, operator
/// 1 - Delta_k whose spectral symbol is 1 + |xi|^2.
struct ParametrixSetup {
  RootSystem rs = RootSystem::rank1();
  Multiplicity k = Multiplicity::uniform(rs, 1);
  Poly p = Poly::constant(1, 1) - Poly::norm_squared(1);
  EllipticSymbol sym;
  TensorPlan plan;

  explicit ParametrixSetup(const Config& cfg)
      : sym(*certify_elliptic(p)),
        plan(rs, k, cfg.grid.half, cfg.grid.panels, cfg.grid.nodes_per_panel) {}
};

}  // namespace detail

inline SuiteReport run_parametrix_suite(const Config& cfg) {
  SuiteReport rep{"parametrix", {}};
  detail::ParametrixSetup s(cfg);
  PolyGaussian phi = PolyGaussian::gaussian(1);
  PolyGaussian pt_phi = apply_poly_op(s.rs, s.k, s.p, phi);
  auto phi_g = sample(s.plan.grid(), [&](const Eigen::VectorXd& x) { return phi.eval(x); });
  auto pt_g = sample(s.plan.grid(), [&](const Eigen::VectorXd& x) { return pt_phi.eval(x); });
  double tol = cfg.tolerance("parametrix", 1e-3);
  auto run = [&](const ReciprocalSymbol& rec, const std::string& variant) {
    Parametrix pr = build_parametrix(rec, s.plan);
    auto lhs = parametrix_convolve(pr, s.plan, pt_g) + remainder_convolve(pr, s.plan, phi_g);
    double defect = (lhs - phi_g).cwiseAbs().maxCoeff();
    Json params{{"operator", "1 - laplacian"}, {"variant", variant}, {"r_out", rec.r_out}};
    detail::add_check(rep, "parametrix.identity." + variant, params, defect, tol);
    return pr;
  };
  ReciprocalSymbol rec = reciprocal_symbol(s.sym);
  run(rec, "global_reciprocal");  // symbol has no zeros: exact inverse, R = 0
  ReciprocalSymbol rec2 = rec;
  rec2.r_out = 2.0;  // forced blending radius: genuinely nonzero remainder
  Parametrix pr2 = run(rec2, "blended");
  // H^8 norm of the remainder density, straight from its compactly supported
  // spectral representation
  const Grid& fg = s.plan.freq_grid();
  std::vector<double> t(fg.size());
  for (size_t i = 0; i < fg.size(); ++i)
    t[i] = std::pow(1.0 + fg.nodes[i].squaredNorm(), 8.0) *
           std::norm(pr2.remainder_hat(static_cast<Eigen::Index>(i))) * fg.weights[i];
  double h8 = std::sqrt(pairwise_sum(t));
  detail::add_check(rep, "parametrix.remainder_h8", Json{{"s", 8}}, h8,
                    cfg.tolerance("remainder_h8", 1e9));
  return rep;
}

inline SuiteReport run_sobolev_suite(const Config& cfg) {
  SuiteReport rep{"sobolev", {}};
  std::mt19937_64 rng(cfg.seed);
  detail::ParametrixSetup s(cfg);
  PolyGaussian f = detail::random_gaussian_type(rng, 1);
  auto fg = sample(s.plan.grid(), [&](const Eigen::VectorXd& x) { return f.eval(x); });
  double tol_ratio = cfg.tolerance("regularity_ratio", 1e-3);
  double tol_res = cfg.tolerance("regularity_residual", 1e-3);
  for (double sv : {0.0, 1.0, 2.0}) {
    RegularityReport r = regularity_experiment(s.sym, s.plan, fg, sv);
    Json params{{"s", sv}, {"m", s.sym.m}};
    detail::add_check(rep, "sobolev.regularity_ratio.s" + std::to_string(int(sv)), params,
                      r.ratio - 1.0, tol_ratio);
    if (sv == 0.0)
      detail::add_check(rep, "sobolev.regularity_residual", params, r.residual, tol_res);
  }
  // H^0 is the plain L^2 norm
  double l2 = s.plan.l2(fg);
  double h0 = sobolev_norm(s.plan, fg, 0.0);
  detail::add_check(rep, "sobolev.h0_is_l2", Json::object(), std::abs(h0 - l2) / l2,
                    cfg.tolerance("h0", 1e-8));
  // H^1 norm squared equals ||f||^2 + sum ||T_i f||^2 (exact spectral identity)
  PolyGaussian tf = dunkl_T(s.rs, s.k, 0, f);
  auto tg = sample(s.plan.grid(), [&](const Eigen::VectorXd& x) { return tf.eval(x); });
  double lhs = std::pow(sobolev_norm(s.plan, fg, 1.0), 2);
  double rhs = l2 * l2 + std::pow(s.plan.l2(tg), 2);
  detail::add_check(rep, "sobolev.h1_gradient_identity", Json::object(),
                    std::abs(lhs - rhs) / rhs, cfg.tolerance("h1_identity", 1e-6));
  // monotonicity in s
  double viol = 0, prev = h0;
  for (double sv : {1.0, 2.0, 3.0}) {
    double cur = sobolev_norm(s.plan, fg, sv);
    viol = std::max(viol, prev - cur);
    prev = cur;
  }
  detail::add_check(rep, "sobolev.monotone_in_s", Json::object(), viol, 1e-12);
  return rep;
}

inline SuiteReport run_riesz_suite(const Config& cfg) {
  SuiteReport rep{"riesz", {}};
  std::mt19937_64 rng(cfg.seed);
  auto zsamples = [&](int count) {
    std::vector<Eigen::VectorXcd> out;
    for (int i = 0; i < count; ++i) {
      Eigen::VectorXcd z(2);
      for (int d = 0; d < 2; ++d)
        z(d) = Complex(1.0 + 2.0 * (rng() % 1000) / 1000.0, -1.0 + 2.0 * (rng() % 1000) / 1000.0);
      out.push_back(z);
    }
    return out;
  };
  bool want_classical = true, want_deformed = true;
  RatVec deformed_k{Rational(1, 2), Rational(1)};
  if (cfg.raw.contains("riesz")) {
    const Json& r = cfg.raw.at("riesz");
    int n = r.value("n", 2);
    Rational kv = rational_from_string(r.value("k", std::string("1")));
    if (kv < 0) throw ConfigError("riesz.k must be nonnegative");
    want_classical = (n == 1);
    want_deformed = (n == 2);
    if (want_deformed) deformed_k = {kv};
  }
  if (want_classical) {
    RieszContext ctx(1, Rational(0), cfg.level);
    PolyGaussian phi = PolyGaussian::gaussian(1);
    // mu = 0: the distribution degenerates to the point mass at the origin
    Complex p0 = ctx.pair(Complex(0.0, 0.0), phi);
    detail::add_check(rep, "riesz.delta_at_zero", Json{{"n", 1}, {"k", "0"}},
                      std::abs(p0 - phi.eval(Eigen::VectorXd::Zero(1))),
                      cfg.tolerance("riesz_classical", 1e-6));
    // half-line convolution: order 1 with order 1 gives order 2
    double worst = 0;
    for (double x : {0.5, 1.0, 2.0}) {
      Complex lhs = halfline_convolution_density(1.0, 1.0, x, cfg.level);
      Complex rhs = std::pow(x, 1.0) / cgamma(2.0);  // density of the order-2 member
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    detail::add_check(rep, "riesz.halfline_order_sum", Json{{"mu", 1.0}, {"nu", 1.0}}, worst,
                      cfg.tolerance("riesz_classical", 1e-6));
    // fractional orders through the direct route
    double worst_frac = 0;
    for (double x : {0.5, 1.5}) {
      Complex lhs = halfline_convolution_density(1.2, 1.5, x, cfg.level);
      Complex rhs = std::pow(x, 1.7) / cgamma(2.7);
      worst_frac = std::max(worst_frac, std::abs(lhs - rhs) / std::abs(rhs));
    }
    detail::add_check(rep, "riesz.halfline_fractional", Json{{"mu", 1.2}, {"nu", 1.5}}, worst_frac,
                      cfg.tolerance("riesz_direct", 1e-4));
    // Laplace transform of the classical family
    Eigen::VectorXcd z(1);
    z << Complex(1.3, 0.4);
    Complex mu(1.6, 0.2);
    Complex lhs = ctx.laplace(mu, z);
    Complex rhs = std::exp(-mu * std::log(z(0)));
    detail::add_check(rep, "riesz.laplace_classical", Json{{"n", 1}},
                      std::abs(lhs - rhs) / std::abs(rhs), cfg.tolerance("riesz_classical", 1e-6));
    // raising identity at n = 1
    RaisingReport rr = raising_check(ctx, Complex(1.4, 0.0), phi);
    detail::add_check(rep, "riesz.raising.n1", Json{{"n", 1}}, rr.rel_err,
                      cfg.tolerance("riesz_raising", 1e-6));
  }
  if (want_deformed) {
    for (const Rational& kv : deformed_k) {
      RieszContext ctx(2, kv, cfg.level);
      std::string ks = rational_to_string(kv);
      Complex mu(ctx.mu0() + 1.0, 0.4);
      auto zs = zsamples(10);
      double worst = 0;
      for (const auto& z : zs) {
        Complex lhs = ctx.laplace(mu, z);
        Complex rhs = delta_power(z, -mu);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
      }
      detail::add_check(rep, "riesz.laplace_power.k=" + ks,
                        Json{{"n", 2}, {"k", ks}, {"samples", 10}}, worst,
                        cfg.tolerance("riesz_laplace", 1e-3));
      Complex nu(ctx.mu0() + 1.2, -0.3);
      Eigen::VectorXd shift = Eigen::VectorXd::Zero(2);
      auto checks = convolution_identity_check(ctx, mu, nu, shift, zs);
      double worst_conv = 0;
      for (const auto& c : checks) worst_conv = std::max(worst_conv, c.rel_err);
      detail::add_check(rep, "riesz.convolution_laplace.k=" + ks, Json{{"n", 2}, {"k", ks}},
                        worst_conv, cfg.tolerance("riesz_conv", 1e-3));
      PolyGaussian phi2 = PolyGaussian::gaussian(2);
      RaisingReport rr = raising_check(ctx, Complex(ctx.mu0() + 1.3, 0.0), phi2);
      detail::add_check(rep, "riesz.raising.k=" + ks, Json{{"n", 2}, {"k", ks}}, rr.rel_err,
                        cfg.tolerance("riesz_raising", 1e-6));
      // pairing is independent of the lowering depth
      Complex shallow = ctx.pair(mu, phi2);
      Complex deep = ctx.pair(mu, phi2, ctx.lowering_depth(mu) + 1);
      detail::add_check(rep, "riesz.lowering_consistent.k=" + ks, Json{{"n", 2}, {"k", ks}},
                        std::abs(shallow - deep) / std::abs(shallow),
                        cfg.tolerance("riesz_lowering", 1e-5));
    }
  }
  return rep;
}

inline SuiteReport run_suite(const std::string& name, const Config& cfg) {
  if (name == "poly") return run_poly_suite(cfg);
  if (name == "transform") return run_transform_suite(cfg);
  if (name == "supports") return run_supports_suite(cfg);
  if (name == "parametrix") return run_parametrix_suite(cfg);
  if (name == "sobolev") return run_sobolev_suite(cfg);
  if (name == "riesz") return run_riesz_suite(cfg);
  if (name == "all") {
    SuiteReport rep{"all", {}};
    for (const char* s : {"poly", "transform", "supports", "parametrix", "sobolev", "riesz"}) {
      SuiteReport sub = run_suite(s, cfg);
      rep.records.insert(rep.records.end(), sub.records.begin(), sub.records.end());
    }
    return rep;
  }
  throw ConfigError("unknown suite: " + name);
}

// ---------------------------------------------------------------------------
// Convergence tables

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool monotone_ok = true;
};

inline std::string to_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.columns.size(); ++i)
    out += t.columns[i] + (i + 1 < t.columns.size() ? "," : "\n");
  for (const auto& row : t.rows)
    for (size_t i = 0; i < row.size(); ++i) out += row[i] + (i + 1 < row.size() ? "," : "\n");
  return out;
}

namespace detail {
inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}
}  // namespace detail

inline Table emit_mehta_table(const Config& cfg) {
  RootSystem rs = RootSystem::rank1();
  Rational kv(1);
  if (cfg.raw.contains("table")) {
    const Json& t = cfg.raw.at("table");
    if (t.contains("root_system")) rs = make_root_system(t.at("root_system").get<std::string>());
    if (t.contains("k")) kv = rational_from_string(t.at("k").get<std::string>());
  }
  Multiplicity k = Multiplicity::uniform(rs, kv);
  double oracle = mehta_closed_form(rs, k);
  Table t{{"level", "measured", "abs_error", "monotone"}, {}, true};
  double prev = std::numeric_limits<double>::infinity();
  for (int level : {1, 2, 3}) {
    double m = mehta_constant(rs, k, level);
    double err = std::abs(m - oracle);
    bool mono = err <= prev;
    t.monotone_ok = t.monotone_ok && mono;
    t.rows.push_back({std::to_string(level), detail::fmt(m), detail::fmt(err),
                      mono ? "yes" : "no"});
    prev = err;
  }
  return t;
}

inline Table emit_plancherel_table(const Config& cfg) {
  RootSystem rs = RootSystem::rank1();
  Rational kv(0);
  if (cfg.raw.contains("table")) {
    const Json& tj = cfg.raw.at("table");
    if (tj.contains("root_system")) rs = make_root_system(tj.at("root_system").get<std::string>());
    if (tj.contains("k")) kv = rational_from_string(tj.at("k").get<std::string>());
  }
  Multiplicity k = Multiplicity::uniform(rs, kv);
  Table t{{"panels", "nodes_per_axis", "defect", "monotone"}, {}, true};
  double prev = std::numeric_limits<double>::infinity();
  for (int panels : {8, 16, 32}) {
    TensorPlan plan(rs, k, cfg.grid.half, panels, cfg.grid.nodes_per_panel);
    auto fg = sample(plan.grid(),
                     [](const Eigen::VectorXd& x) { return std::exp(-0.45 * x.squaredNorm()); });
    double a = plan.l2(fg);
    double defect = std::abs(plan.freq_l2(plan.forward(fg)) - a) / a;
    bool mono = defect <= prev;
    t.monotone_ok = t.monotone_ok && mono;
    t.rows.push_back({std::to_string(panels),
                      std::to_string(panels * cfg.grid.nodes_per_panel), detail::fmt(defect),
                      mono ? "yes" : "no"});
    prev = defect;
  }
  return t;
}

inline Table emit_kernel_table(const Config& cfg) {
  auto rs = RootSystem::rank1();
  Multiplicity k = Multiplicity::uniform(rs, 1);
  SeriesKernel sk(build_intertwiner(rs, k, cfg.kernel_n));
  Rank1Kernel closed(1.0);
  Eigen::VectorXcd lam(1);
  lam << Complex(1.0, 0.0);
  Eigen::VectorXd x(1);
  x << 1.0;
  Complex oracle = closed(Complex(1.0, 0.0));
  Table t{{"N", "value", "abs_error", "tail_bound", "within_bound"}, {}, true};
  for (int n : {5, 10, 20, 30}) {
    if (n > cfg.kernel_n) break;
    KernelValue v = kernel_series(sk, lam, x, n);
    double err = std::abs(v.value - oracle);
    bool ok = err <= v.tail_bound;
    t.monotone_ok = t.monotone_ok && ok;
    t.rows.push_back({std::to_string(n), detail::fmt(v.value.real()), detail::fmt(err),
                      detail::fmt(v.tail_bound), ok ? "yes" : "no"});
  }
  return t;
}

inline Table emit_table(const std::string& kind, const Config& cfg) {
  if (kind == "mehta_convergence") return emit_mehta_table(cfg);
  if (kind == "plancherel_convergence") return emit_plancherel_table(cfg);
  if (kind == "kernel_truncation") return emit_kernel_table(cfg);
  throw ConfigError("unknown table kind: " + kind);
}

}  // namespace dunkl
