#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <memory>
#include <vector>

#include "dunkl/intertwiner.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

using Complex = std::complex<double>;

namespace detail {
inline const std::vector<double>& factorials() {
  static const std::vector<double> f = [] {
    std::vector<double> v{1.0};
    for (int n = 1; n <= 170; ++n) v.push_back(v.back() * n);
    return v;
  }();
  return f;
}
}  // namespace detail

/// Remainder sum_{n > N} t^n / n! for t >= 0; rigorous upper bound.
inline double exp_tail(double t, int n_trunc) {
  const auto& fact = detail::factorials();
  if (n_trunc + 1 < static_cast<int>(fact.size()) && t < 0.5 * (n_trunc + 2)) {
    double lead = std::pow(t, n_trunc + 1) / fact[n_trunc + 1];
    return lead / (1.0 - t / (n_trunc + 2));
  }
  // crude but valid fallback
  double partial = 0, term = 1;
  for (int n = 0; n <= n_trunc; ++n) {
    partial += term;
    term *= t / (n + 1);
  }
  return std::max(std::exp(t) - partial, 0.0);
}

/// Truncated Dunkl-kernel series E_N(lambda, x) = sum_{n<=N} V(<lambda,.>^n/n!)(x),
/// with the intertwiner blocks cached in double precision.
class SeriesKernel {
 public:
  SeriesKernel() = default;
  SeriesKernel(const GradedLinearMap& v) : dim_(v.dim()) {
    for (int n = 0; n <= v.max_degree(); ++n) {
      bases_.push_back(monomial_basis(dim_, n));
      const RatMat& b = v.block(n);
      Eigen::MatrixXd m(b.size(), b.size());
      for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) m(i, j) = to_double(b[i][j]);
      blocks_.push_back(std::move(m));
    }
  }

  int dim() const { return dim_; }
  int max_degree() const { return static_cast<int>(blocks_.size()) - 1; }

  /// Coefficient vectors of V(<lambda,.>^n / n!) for n = 0..N.
  std::vector<Eigen::VectorXcd> coefficients(const Eigen::VectorXcd& lambda, int n_trunc) const {
    if (n_trunc > max_degree())
      throw std::invalid_argument("SeriesKernel: N beyond built intertwiner");
    const auto& fact = detail::factorials();
    std::vector<Eigen::VectorXcd> out;
    for (int n = 0; n <= n_trunc; ++n) {
      const auto& basis = bases_[n];
      Eigen::VectorXcd c(basis.size());
      for (size_t a = 0; a < basis.size(); ++a) {
        // multinomial(n; m) lambda^m / n!  ==  prod lambda_i^{m_i} / m!
        Complex t = 1.0;
        for (int i = 0; i < dim_; ++i) {
          for (int e = 0; e < basis[a][i]; ++e) t *= lambda(i);
          t /= fact[basis[a][i]];
        }
        c(static_cast<Eigen::Index>(a)) = t;
      }
      out.push_back(blocks_[n].cast<Complex>() * c);
    }
    return out;
  }

  Complex eval_with_coefficients(const std::vector<Eigen::VectorXcd>& coeffs,
                                 const Eigen::VectorXd& x) const {
    Complex s = 0.0;
    for (size_t n = 0; n < coeffs.size(); ++n) {
      const auto& basis = bases_[n];
      for (size_t a = 0; a < basis.size(); ++a) {
        double m = 1.0;
        for (int i = 0; i < dim_; ++i)
          for (int e = 0; e < basis[a][i]; ++e) m *= x(i);
        s += coeffs[n](static_cast<Eigen::Index>(a)) * m;
      }
    }
    return s;
  }

  Complex evaluate(const Eigen::VectorXcd& lambda, const Eigen::VectorXd& x, int n_trunc) const {
    return eval_with_coefficients(coefficients(lambda, n_trunc), x);
  }

  /// Rigorous truncation bound sum_{n>N} (|lambda| |x|)^n / n!, valid since
  /// |V(<lambda,.>^n)(x)| <= (|lambda| |x|)^n by positivity of V.
  static double tail_bound(double lambda_norm, double x_norm, int n_trunc) {
    return exp_tail(lambda_norm * x_norm, n_trunc);
  }

 private:
  int dim_ = 0;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<Eigen::MatrixXd> blocks_;
};

/// One-dimensional Dunkl kernel E_k(z) for R = {+-1}, via the integral
/// representation E_k(z) = int_{-1}^1 e^{t z} dmu_k(t) with the probability
/// measure dmu_k ~ (1-t)^{k-1} (1+t)^k dt. Stable for purely imaginary z.
class Rank1Kernel {
 public:
  explicit Rank1Kernel(double k, int quad_nodes = 48) : k_(k) {
    if (k < 0) throw std::invalid_argument("Rank1Kernel: k < 0");
    if (k > 0) {
      rule_ = gauss_jacobi(quad_nodes, k - 1.0, k);
      double total = 0;
      for (double w : rule_.weights) total += w;
      for (double& w : rule_.weights) w /= total;  // probability measure, E(0)=1
    }
  }

  Complex operator()(Complex z) const {
    if (k_ == 0) return std::exp(z);
    if (k_ == 1.0) {
      // closed form ((2z-1)e^z + e^{-z}) / (2z^2); series near 0 where the
      // numerator cancels to O(z^2)
      if (std::abs(z) < 0.05) return series(z);
      return ((2.0 * z - 1.0) * std::exp(z) + std::exp(-z)) / (2.0 * z * z);
    }
    Complex s = 0.0;
    for (size_t i = 0; i < rule_.nodes.size(); ++i)
      s += rule_.weights[i] * std::exp(z * rule_.nodes[i]);
    return s;
  }

  /// Integral-representation value regardless of k (cross-check oracle).
  Complex quadrature_value(Complex z) const {
    if (k_ == 0) return std::exp(z);
    Complex s = 0.0;
    for (size_t i = 0; i < rule_.nodes.size(); ++i)
      s += rule_.weights[i] * std::exp(z * rule_.nodes[i]);
    return s;
  }

  /// Taylor series sum b_n z^n with b_n = b_{n-1} / (n + 2k [n odd]).
  Complex series(Complex z, int n_terms = 24) const {
    Complex s = 1.0, term = 1.0;
    for (int n = 1; n <= n_terms; ++n) {
      term *= z / (n + (n % 2 == 1 ? 2.0 * k_ : 0.0));
      s += term;
    }
    return s;
  }

  double k() const { return k_; }

 private:
  double k_;
  Rule1D rule_;
};

/// Dunkl kernel evaluator E(lambda, x).
///
/// Strategies:
///  - exponential: k == 0, E = exp(<lambda, x>);
///  - factored: all roots pairwise parallel or orthogonal, so the kernel is a
///    product of rank-one kernels along root directions times an exponential
///    in the orthogonal complement;
///  - series: truncated intertwiner series with a rigorous tail bound.
class KernelEvaluator {
 public:
  /// Closed-form evaluator; throws std::invalid_argument when the root system
  /// does not decompose into mutually orthogonal rank-one pieces.
  static KernelEvaluator closed_form(const RootSystem& rs, const Multiplicity& k) {
    KernelEvaluator ev;
    ev.dim_ = rs.ambient_dim;
    if (k.all_zero()) return ev;
    // parallel classes of roots, one representative (positive root) each
    for (int p : rs.positive_roots) {
      Eigen::VectorXd u(rs.ambient_dim);
      for (int i = 0; i < rs.ambient_dim; ++i) u(i) = to_double(rs.roots[p][i]);
      u.normalize();
      ev.factors_.push_back({u, std::make_shared<Rank1Kernel>(to_double(k.of_root(rs, p)))});
    }
    for (size_t a = 0; a < ev.factors_.size(); ++a)
      for (size_t b = a + 1; b < ev.factors_.size(); ++b)
        if (std::abs(ev.factors_[a].direction.dot(ev.factors_[b].direction)) > 1e-12)
          throw std::invalid_argument("KernelEvaluator: root system does not factor");
    return ev;
  }

  static KernelEvaluator series(const RootSystem& rs, const Multiplicity& k,
                                const GradedLinearMap& v, int n_trunc) {
    KernelEvaluator ev;
    ev.dim_ = rs.ambient_dim;
    ev.series_ = std::make_shared<SeriesKernel>(v);
    ev.n_trunc_ = n_trunc;
    return ev;
  }

  /// Picks the closed form when available, otherwise builds a series evaluator.
  static KernelEvaluator automatic(const RootSystem& rs, const Multiplicity& k,
                                   int series_degree = 24) {
    try {
      return closed_form(rs, k);
    } catch (const std::invalid_argument&) {
      return series(rs, k, build_intertwiner(rs, k, series_degree), series_degree);
    }
  }

  int dim() const { return dim_; }
  bool is_series() const { return series_ != nullptr; }

  Complex operator()(const Eigen::VectorXcd& lambda, const Eigen::VectorXd& x) const {
    if (series_) return series_->evaluate(lambda, x, n_trunc_);
    Complex inner = 0.0;
    for (int i = 0; i < dim_; ++i) inner += lambda(i) * x(i);
    Complex val = 1.0;
    for (const auto& f : ev_factors()) {
      Complex lc = 0.0;
      double xc = f.direction.dot(x);
      for (int i = 0; i < dim_; ++i) lc += lambda(i) * f.direction(i);
      val *= (*f.kernel)(lc * xc);
      inner -= lc * xc;
    }
    return val * std::exp(inner);
  }

  Complex operator()(const Eigen::VectorXd& lambda, const Eigen::VectorXd& x) const {
    return (*this)(Eigen::VectorXcd(lambda.cast<Complex>()), x);
  }

  /// Error bound for the reported value; zero for closed forms (float precision).
  double error_bound(double lambda_norm, double x_norm) const {
    if (!series_) return 0.0;
    return SeriesKernel::tail_bound(lambda_norm, x_norm, n_trunc_);
  }

 private:
  struct Factor {
    Eigen::VectorXd direction;
    std::shared_ptr<Rank1Kernel> kernel;
  };
  const std::vector<Factor>& ev_factors() const { return factors_; }

  int dim_ = 0;
  std::vector<Factor> factors_;
  std::shared_ptr<SeriesKernel> series_;
  int n_trunc_ = 0;
};

struct KernelValue {
  Complex value;
  double tail_bound;
};

/// Truncated kernel series with a bound on the error of the reported double:
/// the rigorous truncation tail plus a roundoff allowance for summing the
/// series (the terms are dominated by those of e^{|lambda||x|}).
inline KernelValue kernel_series(const SeriesKernel& sk, const Eigen::VectorXcd& lambda,
                                 const Eigen::VectorXd& x, int n_trunc) {
  double ln = 0;
  for (int i = 0; i < lambda.size(); ++i) ln += std::norm(lambda(i));
  double t = std::sqrt(ln) * x.norm();
  double roundoff = 32.0 * std::numeric_limits<double>::epsilon() * std::exp(std::min(t, 700.0));
  return {sk.evaluate(lambda, x, n_trunc),
          SeriesKernel::tail_bound(std::sqrt(ln), x.norm(), n_trunc) + roundoff};
}

}  // namespace dunkl
