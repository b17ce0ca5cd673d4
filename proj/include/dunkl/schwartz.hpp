#pragma once

#include <Eigen/Dense>

#include <complex>

#include "dunkl/dunkl_op.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// Schwartz-class test function p(x) exp(-a|x|^2/2) with rational a > 0.
///
/// The class is closed under Dunkl operators because |s_alpha x| = |x| keeps
/// the Gaussian factor reflection invariant:
///   T_xi (p g_a) = (T_xi p - a <xi, x> p) g_a.
struct PolyGaussian {
  Poly p;
  Rational a;

  static PolyGaussian gaussian(int dim, const Rational& a = 1) {
    return {Poly::constant(dim, 1), a};
  }

  double eval(const Eigen::VectorXd& x) const {
    std::vector<double> xv(x.data(), x.data() + x.size());
    return p.eval_at(xv) * std::exp(-0.5 * to_double(a) * x.squaredNorm());
  }
};

inline PolyGaussian dunkl_T(const RootSystem& rs, const Multiplicity& k, const RatVec& xi,
                            const PolyGaussian& f) {
  Poly lin = Poly::linear_form(xi);
  return {dunkl_T(rs, k, xi, f.p) - lin * f.p * f.a, f.a};
}

inline PolyGaussian dunkl_T(const RootSystem& rs, const Multiplicity& k, int direction,
                            const PolyGaussian& f) {
  RatVec xi(rs.ambient_dim, Rational(0));
  xi[direction] = 1;
  return dunkl_T(rs, k, xi, f);
}

/// op(T) applied to a polynomial-Gaussian; stays in the class.
inline PolyGaussian apply_poly_op(const RootSystem& rs, const Multiplicity& k, const Poly& op,
                                  const PolyGaussian& f) {
  PolyGaussian out{Poly(f.p.dim()), f.a};
  for (auto& [m, c] : op.terms()) {
    PolyGaussian t{f.p * c, f.a};
    for (int i = 0; i < op.dim(); ++i)
      for (int e = 0; e < m[i]; ++e) t = dunkl_T(rs, k, i, t);
    out.p += t.p;
  }
  return out;
}

}  // namespace dunkl
