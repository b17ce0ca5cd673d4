#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "dunkl/dunkl_op.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/rational_fn.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

namespace detail {

/// Quasi-uniform unit-sphere sample with its covering-radius estimate.
inline std::pair<std::vector<Eigen::VectorXd>, double> sphere_sample(int dim, int n) {
  std::vector<Eigen::VectorXd> pts;
  if (dim == 1) {
    Eigen::VectorXd a(1), b(1);
    a << 1.0;
    b << -1.0;
    return {{a, b}, 0.0};
  }
  if (dim == 2) {
    for (int i = 0; i < n; ++i) {
      double t = 2 * M_PI * i / n;
      Eigen::VectorXd x(2);
      x << std::cos(t), std::sin(t);
      pts.push_back(x);
    }
    return {pts, M_PI / n};
  }
  if (dim == 3) {
    // Fibonacci sphere; covering radius ~ 2.4/sqrt(n), padded by 1.5
    double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
      double z = 1.0 - 2.0 * (i + 0.5) / n;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      Eigen::VectorXd x(3);
      x << r * std::cos(golden * i), r * std::sin(golden * i), z;
      pts.push_back(x);
    }
    return {pts, 3.6 / std::sqrt(static_cast<double>(n))};
  }
  throw std::invalid_argument("sphere_sample: dim > 3 not supported");
}

/// Sum of |coefficients| of the degree-j homogeneous part.
inline double abs_coeff_sum(const Poly& p, int j) {
  double s = 0;
  for (auto& [m, c] : p.terms())
    if (total_degree(m) == j) s += std::abs(to_double(c));
  return s;
}

}  // namespace detail

/// Certificate that the top homogeneous part p_m never vanishes off 0:
/// c is a sound lower bound for min_{|x|=1} |p_m(x)| (sampled minimum minus
/// a Lipschitz margin from the exact gradient bound m * sum|coeffs|).
struct EllipticSymbol {
  Poly p;
  int m;
  Poly top;  // p_m
  double c;
  int sphere_samples;

  /// Fourier-side symbol of p(T): the transform maps T_xi to i<xi,.>,
  /// so p(T) acts spectrally as multiplication by p(i xi).
  Complex symbol(const Eigen::VectorXd& xi) const {
    std::vector<double> v(xi.data(), xi.data() + xi.size());
    return p.eval_i(v);
  }
};

inline std::optional<EllipticSymbol> certify_elliptic(const Poly& p, int sphere_samples = 20000) {
  if (p.is_zero()) return std::nullopt;
  int m = p.degree();
  Poly top = p.homogeneous_part(m);
  auto [pts, h] = detail::sphere_sample(p.dim(), sphere_samples);
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& x : pts) {
    std::vector<double> v(x.data(), x.data() + x.size());
    lo = std::min(lo, std::abs(top.eval_at(v)));
  }
  double lipschitz = m * detail::abs_coeff_sum(top, m);
  double c = lo - lipschitz * h;
  if (c <= 0) return std::nullopt;
  return EllipticSymbol{p, m, std::move(top), c, sphere_samples};
}

/// Smooth everywhere, equal to 1/p(i.) outside B_{r_out}; inside, a radial
/// taper toward 0 through the boundary value (bounded by construction).
struct ReciprocalSymbol {
  Poly p;
  int m;
  double c;
  double r_out;

  Complex sigma(const Eigen::VectorXd& x) const {
    std::vector<double> v(x.data(), x.data() + x.size());
    return p.eval_i(v);
  }

  Complex q(const Eigen::VectorXd& x) const {
    double r = x.norm();
    if (r_out == 0.0 || r >= r_out) return 1.0 / sigma(x);
    if (r < 1e-14) return 0.0;
    double t = r / r_out;
    double s = t * t * (3 - 2 * t);  // cubic radial taper
    return s / sigma(x * (r_out / r));
  }
};

/// Builds the reciprocal of an elliptic symbol. The cutoff radius comes from
/// the sound bound |p(ix)| >= c|x|^m - sum_{j<m} C_j |x|^j with C_j the
/// absolute coefficient sums: beyond R* = max_j (2m C_j / c)^{1/(m-j)} the
/// lower-order terms eat at most half of c|x|^m. If the symbol additionally
/// has no zero in the closed ball B_{R*} (verified by dense sampling with a
/// Lipschitz margin), r_out collapses to 0 and q = 1/p(i.) globally.
inline ReciprocalSymbol reciprocal_symbol(const EllipticSymbol& sym, int ball_samples = 40) {
  double r_star = 0;
  for (int j = 0; j < sym.m; ++j) {
    double cj = detail::abs_coeff_sum(sym.p, j);
    if (cj > 0) r_star = std::max(r_star, std::pow(2.0 * sym.m * cj / sym.c, 1.0 / (sym.m - j)));
  }
  ReciprocalSymbol rec{sym.p, sym.m, sym.c, std::max(r_star, 1e-9)};
  if (r_star == 0) {
    // pure homogeneous symbol: vanishes at 0, keep a unit blending ball
    rec.r_out = 1.0;
    return rec;
  }
  // try to certify |sigma| > 0 on the closed ball B_{r_star}
  double lo = std::numeric_limits<double>::infinity();
  double step = r_star / ball_samples;
  std::vector<double> lip_coeff(sym.m + 1, 0.0);
  for (int j = 0; j <= sym.m; ++j) lip_coeff[j] = detail::abs_coeff_sum(sym.p, j) * j;
  auto lipschitz = [&](double r) {
    double l = 0;
    for (int j = 1; j <= sym.m; ++j) l += lip_coeff[j] * std::pow(r, j - 1);
    return l;
  };
  const int dim = sym.p.dim();
  auto [dirs, h] = detail::sphere_sample(dim, dim == 1 ? 2 : (dim == 2 ? 720 : 4000));
  for (int i = 0; i <= ball_samples; ++i) {
    double r = i * step;
    for (const auto& u : dirs) {
      lo = std::min(lo, std::abs(rec.sigma(u * r)));
      if (lo <= 0) break;
    }
  }
  double mesh = std::max(step, r_star * h);  // crude covering radius of the ball sample
  if (lo - lipschitz(r_star) * mesh > 0) rec.r_out = 0.0;
  return rec;
}

/// Parametrix data on a transform plan's frequency grid:
///   E = (1/c_k) F^{-1} u_q   (spectral_e = q/c_k),
///   R = delta_0 - p(T) E,  F R = u_f with c_k f = 1 - sigma q.
struct Parametrix {
  Eigen::VectorXcd spectral_e;
  Eigen::VectorXcd remainder_hat;      // f on the frequency grid
  Eigen::VectorXcd remainder_density;  // F^{-1} f
};

template <typename Plan>
inline Parametrix build_parametrix(const ReciprocalSymbol& rec, const Plan& plan) {
  const Grid& g = plan.freq_grid();
  Parametrix pr;
  pr.spectral_e.resize(static_cast<Eigen::Index>(g.size()));
  pr.remainder_hat.resize(static_cast<Eigen::Index>(g.size()));
  for (size_t i = 0; i < g.size(); ++i) {
    Complex s = rec.sigma(g.nodes[i]);
    Complex q = rec.q(g.nodes[i]);
    pr.spectral_e(static_cast<Eigen::Index>(i)) = q / plan.mehta();
    pr.remainder_hat(static_cast<Eigen::Index>(i)) = (1.0 - s * q) / plan.mehta();
  }
  pr.remainder_density = plan.inverse(pr.remainder_hat);
  return pr;
}

/// E *_k h, spectrally: F(E * h) = c_k (q/c_k) F h = q . F h.
template <typename Plan>
inline Eigen::VectorXcd parametrix_convolve(const Parametrix& pr, const Plan& plan,
                                            const Eigen::VectorXcd& h) {
  return plan.inverse((plan.mehta() * pr.spectral_e.array() * plan.forward(h).array()).matrix());
}

/// R *_k phi, spectrally: F(R * phi) = (1 - sigma q) . F phi.
template <typename Plan>
inline Eigen::VectorXcd remainder_convolve(const Parametrix& pr, const Plan& plan,
                                           const Eigen::VectorXcd& phi) {
  return plan.inverse(
      (plan.mehta() * pr.remainder_hat.array() * plan.forward(phi).array()).matrix());
}

/// Sobolev norm of order s: ( int <xi>^{2s} |F f|^2 omega )^{1/2}.
template <typename Plan>
inline double sobolev_norm(const Plan& plan, const Eigen::VectorXcd& f, double s) {
  Eigen::VectorXcd fhat = plan.forward(f);
  const Grid& g = plan.freq_grid();
  std::vector<double> t(g.size());
  for (size_t i = 0; i < g.size(); ++i)
    t[i] = std::pow(1.0 + g.nodes[i].squaredNorm(), s) *
           std::norm(fhat(static_cast<Eigen::Index>(i))) * g.weights[i];
  return std::sqrt(pairwise_sum(t));
}

struct RegularityReport {
  double norm_f;      // ||f||_{H^s}
  double norm_u;      // ||u||_{H^{s+m}}
  double ratio;       // norm_u / norm_f
  double residual;    // ||p(T)u - f||_{L^2} / ||f||_{L^2}, p(T) applied spectrally
};

/// Solves p(T) u = f spectrally (u-hat = f-hat / sigma) and reports the
/// regularity gain. Requires the symbol to be bounded away from 0 on the grid.
template <typename Plan>
inline RegularityReport regularity_experiment(const EllipticSymbol& sym, const Plan& plan,
                                              const Eigen::VectorXcd& f, double s) {
  const Grid& g = plan.freq_grid();
  Eigen::VectorXcd fhat = plan.forward(f);
  Eigen::VectorXcd uhat(fhat.size());
  Eigen::VectorXcd sigma(fhat.size());
  double min_abs = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < g.size(); ++i) {
    sigma(static_cast<Eigen::Index>(i)) = sym.symbol(g.nodes[i]);
    min_abs = std::min(min_abs, std::abs(sigma(static_cast<Eigen::Index>(i))));
  }
  if (min_abs < 1e-8)
    throw std::invalid_argument("regularity_experiment: symbol vanishes on the grid");
  uhat = fhat.cwiseQuotient(sigma);
  Eigen::VectorXcd u = plan.inverse(uhat);
  Eigen::VectorXcd pu = plan.inverse(sigma.cwiseProduct(plan.forward(u)));
  RegularityReport rep;
  rep.norm_f = sobolev_norm(plan, f, s);
  rep.norm_u = sobolev_norm(plan, u, s + sym.m);
  rep.ratio = rep.norm_u / rep.norm_f;
  rep.residual = plan.l2(pu - f) / plan.l2(f);
  return rep;
}

// ---------------------------------------------------------------------------
// Empirical symbol-class tables: C_beta = sup_x |T^beta a(x)| <x>^{|beta|-m}.

struct SymbolTableEntry {
  Monomial beta;
  double c_beta;
};

namespace detail {
inline std::vector<Monomial> multi_indices_upto(int dim, int b_max) {
  std::vector<Monomial> out;
  for (int n = 0; n <= b_max; ++n) {
    auto level = monomial_basis(dim, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}
}  // namespace detail

/// Polynomial symbol of order m: T^beta a computed exactly, sup sampled.
inline std::vector<SymbolTableEntry> symbol_estimate_table(
    const RootSystem& rs, const Multiplicity& k, const Poly& a, int m, int b_max,
    const std::vector<Eigen::VectorXd>& points) {
  std::vector<SymbolTableEntry> out;
  for (const auto& beta : detail::multi_indices_upto(a.dim(), b_max)) {
    Poly d = a;
    for (int i = 0; i < a.dim(); ++i)
      for (int e = 0; e < beta[i]; ++e) d = dunkl_T(rs, k, i, d);
    double sup = 0;
    for (const auto& x : points) {
      std::vector<double> v(x.data(), x.data() + x.size());
      sup = std::max(sup, std::abs(d.eval_at(v)) *
                              std::pow(1.0 + x.squaredNorm(), 0.5 * (total_degree(beta) - m)));
    }
    out.push_back({beta, sup});
  }
  return out;
}

/// Reciprocal symbol 1/p of order -m, via the exact rational-function
/// calculus; points must lie outside B_{r_out} where q = 1/p.
inline std::vector<SymbolTableEntry> symbol_estimate_table_reciprocal(
    const RootSystem& rs, const Multiplicity& k, const Poly& p, int m, int b_max,
    const std::vector<Eigen::VectorXd>& points) {
  std::vector<SymbolTableEntry> out;
  GroupRationalFn base =
      GroupRationalFn::quotient(Poly::constant(p.dim(), 1), p, rs.ambient_dim);
  for (const auto& beta : detail::multi_indices_upto(p.dim(), b_max)) {
    GroupRationalFn d = base;
    for (int i = 0; i < p.dim(); ++i)
      for (int e = 0; e < beta[i]; ++e) d = dunkl_T_rational(rs, k, i, d);
    double sup = 0;
    for (const auto& x : points)
      sup = std::max(sup, std::abs(d.eval(x)) *
                              std::pow(1.0 + x.squaredNorm(), 0.5 * (total_degree(beta) + m)));
    out.push_back({beta, sup});
  }
  return out;
}

}  // namespace dunkl
