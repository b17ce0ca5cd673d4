#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

#include "dunkl/grid.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/root_system.hpp"
#include "dunkl/schwartz.hpp"

namespace dunkl {

/// Gamma function for complex argument (Lanczos, g = 7).
inline Complex cgamma(Complex z) {
  static const double coef[] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059, 12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6,
                                1.5056327351493116e-7};
  if (z.real() < 0.5) return M_PI / (std::sin(M_PI * z) * cgamma(1.0 - z));
  z -= 1.0;
  Complex x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return std::sqrt(2 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

/// Generalized gamma function of the type-A theory:
/// Gamma_n(mu) = (c_k / (2 pi)^{n/2}) prod_{j=1}^n Gamma(mu - k(j-1)),
/// with the Mehta prefactor in closed form: prod_j Gamma(1+jk)/Gamma(1+k).
inline Complex gamma_n(Complex mu, int n, double k) {
  Complex g = 1.0;
  for (int j = 1; j <= n; ++j) {
    g *= std::tgamma(1.0 + j * k) / std::tgamma(1.0 + k);
    g *= cgamma(mu - k * (j - 1));
  }
  return g;
}

/// Pole of Gamma_n at mu: some factor argument mu - k(j-1) hits -N_0.
inline bool gamma_n_pole(Complex mu, int n, double k, double tol = 1e-9) {
  if (std::abs(mu.imag()) > tol) return false;
  for (int j = 1; j <= n; ++j) {
    double a = mu.real() - k * (j - 1);
    if (a < tol && std::abs(a - std::round(a)) < tol) return true;
  }
  return false;
}

/// Generalized Wallach set {0, k, ..., k(n-1)} union (k(n-1), infinity).
inline bool wallach_contains(const Rational& mu, int n, const Rational& k) {
  for (int j = 0; j < n; ++j)
    if (mu == k * j) return true;
  return mu > k * (n - 1);
}

/// Delta(z)^{-mu} = prod z_j^{-mu} with principal logs (Re z > 0).
inline Complex delta_power(const Eigen::VectorXcd& z, Complex e) {
  Complex logd = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) logd += std::log(z(i));
  return std::exp(e * logd);
}

/// Type-A Riesz family in n variables with multiplicity k on the roots
/// e_i - e_j (no roots when n = 1). mu0 = k(n-1).
class RieszContext {
 public:
  RieszContext(int n, const Rational& k, int level = 1)
      : n_(n),
        k_(k),
        rs_(n == 1 ? RootSystem::empty(1) : RootSystem::type_A(n - 1)),
        mult_(n == 1 ? Multiplicity(rs_, {}) : Multiplicity(rs_, {k})),
        ev_(KernelEvaluator::closed_form(rs_, mult_)),
        level_(level) {
    if (n < 1 || n > 2) throw std::invalid_argument("RieszContext: n must be 1 or 2");
  }

  int n() const { return n_; }
  double k() const { return to_double(k_); }
  const Rational& k_exact() const { return k_; }
  double mu0() const { return to_double(k_) * (n_ - 1); }
  const RootSystem& root_system() const { return rs_; }
  const Multiplicity& multiplicity() const { return mult_; }

  /// Density Delta(x)^{mu-mu0-1} omega(x) / Gamma_n(mu) for Re mu > mu0.
  Complex density(Complex mu, const Eigen::VectorXd& x) const {
    if (mu.real() <= mu0()) throw std::invalid_argument("riesz density: Re mu <= mu0");
    double logd = 0;
    for (int i = 0; i < n_; ++i) {
      if (x(i) <= 0) throw std::invalid_argument("riesz density: x not in the open orthant");
      logd += std::log(x(i));
    }
    return std::exp((mu - mu0() - 1.0) * logd) * weight_omega(rs_, mult_, x) /
           gamma_n(mu, n_, k());
  }

  /// int_{R+^n} Delta(x)^sigma omega(x) F(x) dx. Half-line panels graded
  /// toward the boundary; for n=2 the diagonal weight |x1-x2|^{2k} is handled
  /// by the substitution x2 = t x1 (plus the mirrored triangle), which turns
  /// all singular factors into endpoint powers.
  template <typename F>
  Complex orthant_integral(Complex sigma, double x_max, F&& f) const {
    if (sigma.real() <= -1.0 + 1e-12)
      throw std::invalid_argument("orthant_integral: non-integrable boundary power");
    Rule1D radial = half_line_rule(x_max);
    if (n_ == 1) {
      std::vector<Complex> t(radial.nodes.size());
      for (size_t i = 0; i < radial.nodes.size(); ++i) {
        Eigen::VectorXd x(1);
        x << radial.nodes[i];
        t[i] = radial.weights[i] * std::pow(radial.nodes[i], sigma) * f(x);
      }
      return pairwise_sum(t);
    }
    // n = 2: integrand x1^{2 sigma + 2k + 1} t^sigma (1-t)^{2k} [f(x1,t x1) + f(t x1, x1)]
    Rule1D tr = unit_rule();
    double kk = k();
    std::vector<Complex> acc(radial.nodes.size());
    for (size_t i = 0; i < radial.nodes.size(); ++i) {
      double x1 = radial.nodes[i];
      std::vector<Complex> row(tr.nodes.size());
      for (size_t j = 0; j < tr.nodes.size(); ++j) {
        double t = tr.nodes[j];
        Eigen::VectorXd a(2), b(2);
        a << x1, t * x1;
        b << t * x1, x1;
        row[j] = tr.weights[j] * std::pow(t, sigma) * std::pow(1.0 - t, 2 * kk) * (f(a) + f(b));
      }
      acc[i] = radial.weights[i] * std::pow(x1, 2.0 * sigma + 2 * kk + 1.0) * pairwise_sum(row);
    }
    return pairwise_sum(acc);
  }

  /// Minimal lowering depth: smallest m >= 0 with Re mu + m > mu0 + 1/2.
  int lowering_depth(Complex mu) const {
    int m = 0;
    while (mu.real() + m <= mu0() + 0.5) ++m;
    return m;
  }

  /// Weak pairing <R_mu, phi> via analytic continuation:
  /// <R_mu, phi> = (-1)^{n m} <R_{mu+m}, Delta(T)^m phi>.
  Complex pair(Complex mu, const PolyGaussian& phi) const { return pair(mu, phi, lowering_depth(mu)); }

  Complex pair(Complex mu, const PolyGaussian& phi, int depth) const {
    if ((mu.real() + depth) <= mu0())
      throw std::invalid_argument("riesz pair: depth too small for Re mu");
    Poly delta = Poly::constant(n_, 1);
    for (int i = 0; i < n_; ++i) delta = delta * Poly::variable(n_, i);
    PolyGaussian psi = phi;
    for (int m = 0; m < depth; ++m) psi = apply_poly_op(rs_, mult_, delta, psi);
    double x_max = 16.0 / std::sqrt(to_double(phi.a)) + 0.5 * psi.p.degree();
    Complex sigma = mu + static_cast<double>(depth) - mu0() - 1.0;
    Complex integral =
        orthant_integral(sigma, x_max, [&](const Eigen::VectorXd& x) { return psi.eval(x); });
    double sign = (n_ * depth) % 2 == 0 ? 1.0 : -1.0;
    return sign * integral / gamma_n(mu + static_cast<double>(depth), n_, k());
  }

  /// Dunkl-Laplace transform L R_mu(z) = <R_mu, E(-z, .)> by quadrature,
  /// for Re mu > mu0 and Re z > 0 componentwise. Oracle: Delta(z)^{-mu}.
  Complex laplace(Complex mu, const Eigen::VectorXcd& z) const {
    double s = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_; ++i) s = std::min(s, z(i).real());
    if (s <= 0) throw std::invalid_argument("laplace: Re z must be positive");
    double x_max = std::max(45.0 / s, 10.0);
    Complex sigma = mu - mu0() - 1.0;
    Eigen::VectorXcd lam = -z;
    Complex integral = orthant_integral(
        sigma, x_max, [&](const Eigen::VectorXd& x) { return ev_(lam, x); });
    return integral / gamma_n(mu, n_, k());
  }

  /// Laplace transform of e^{-<s,.>} times the R_mu density, for the shift
  /// identity L(e^{-<s,.>} R_mu)(z) = L R_mu(s + z).
  Complex laplace_shifted(Complex mu, const Eigen::VectorXd& s, const Eigen::VectorXcd& z) const {
    Eigen::VectorXcd w = z + s.cast<Complex>();
    return laplace(mu, w);
  }

 private:
  Rule1D half_line_rule(double x_max) const {
    std::vector<double> breaks = graded_breaks(1.0, 18 * level_, 0.12);
    int outer = std::max(8, static_cast<int>(x_max / 2)) * level_;
    std::vector<double> tail = uniform_breaks(1.0, x_max, outer);
    breaks.insert(breaks.end(), tail.begin() + 1, tail.end());
    return composite_legendre(breaks, 10);
  }
  Rule1D unit_rule() const {
    // graded toward both 0 and 1
    std::vector<double> lo = graded_breaks(0.5, 16 * level_, 0.15);
    Rule1D r = composite_legendre(lo, 10);
    Rule1D mirror = r;
    for (size_t i = 0; i < mirror.nodes.size(); ++i) mirror.nodes[i] = 1.0 - mirror.nodes[i];
    r.nodes.insert(r.nodes.end(), mirror.nodes.begin(), mirror.nodes.end());
    r.weights.insert(r.weights.end(), mirror.weights.begin(), mirror.weights.end());
    return r;
  }

  int n_;
  Rational k_;
  RootSystem rs_;
  Multiplicity mult_;
  KernelEvaluator ev_;
  int level_;
};

/// Classical half-line convolution of two Riesz densities at n = 1, k = 0:
/// (R_mu * R_nu)(x) = int_0^x rho_mu(t) rho_nu(x - t) dt. Oracle for the
/// semigroup law against the R_{mu+nu} density.
inline Complex halfline_convolution_density(Complex mu, Complex nu, double x, int level = 1) {
  // t^{mu-1} (x-t)^{nu-1}: grade panels toward both endpoints
  std::vector<double> lo = graded_breaks(0.5 * x, 14 * level, 0.1);
  std::vector<Complex> acc;
  auto piece = [&](double a, double b, bool mirrored) {
    Rule1D r = composite_legendre(std::vector<double>{a, b}, 12);
    for (size_t i = 0; i < r.nodes.size(); ++i) {
      double t = mirrored ? x - r.nodes[i] : r.nodes[i];
      acc.push_back(r.weights[i] * std::pow(t, mu - 1.0) * std::pow(x - t, nu - 1.0));
    }
  };
  for (size_t i = 0; i + 1 < lo.size(); ++i) {
    piece(lo[i], lo[i + 1], false);
    piece(lo[i], lo[i + 1], true);
  }
  return pairwise_sum(acc) / (cgamma(mu) * cgamma(nu));
}

struct RieszCheckSample {
  Eigen::VectorXcd z;
  Complex lhs;
  Complex rhs;
  double rel_err;
};

/// Semigroup law R_mu * R_nu = R_{mu+nu} through its Laplace characterization:
/// L R_mu(w) L R_nu(w) must equal L R_{mu+nu}(w) at w = s + z, all three
/// factors computed by independent quadratures.
inline std::vector<RieszCheckSample> convolution_identity_check(
    const RieszContext& ctx, Complex mu, Complex nu, const Eigen::VectorXd& s,
    const std::vector<Eigen::VectorXcd>& z_samples) {
  std::vector<RieszCheckSample> out;
  for (const auto& z : z_samples) {
    Eigen::VectorXcd w = z + s.cast<Complex>();
    Complex lhs = ctx.laplace(mu, w) * ctx.laplace(nu, w);
    Complex rhs = ctx.laplace(mu + nu, w);
    out.push_back({z, lhs, rhs, std::abs(lhs - rhs) / std::abs(rhs)});
  }
  return out;
}

struct RaisingReport {
  Complex lhs;  // <R_mu, Delta . phi>
  Complex rhs;  // prod_j (mu - k(j-1)) <R_{mu+1}, phi>
  double abs_err;
  double rel_err;
};

/// Delta . R_mu = prod_{j=1}^n (mu - k(j-1)) R_{mu+1}, tested weakly.
inline RaisingReport raising_check(const RieszContext& ctx, Complex mu, const PolyGaussian& phi) {
  Poly delta = Poly::constant(ctx.n(), 1);
  for (int i = 0; i < ctx.n(); ++i) delta = delta * Poly::variable(ctx.n(), i);
  PolyGaussian dphi{delta * phi.p, phi.a};
  Complex lhs = ctx.pair(mu, dphi);
  Complex factor = 1.0;
  for (int j = 1; j <= ctx.n(); ++j) factor *= mu - ctx.k() * (j - 1);
  Complex rhs = factor * ctx.pair(mu + 1.0, phi);
  double denom = std::max(std::abs(lhs), std::abs(rhs));
  double abs_err = std::abs(lhs - rhs);
  return {lhs, rhs, abs_err, denom > 1e-12 ? abs_err / denom : abs_err};
}

}  // namespace dunkl
