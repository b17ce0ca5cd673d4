#pragma once

#include "dunkl/poly.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// T_xi p = d_xi p + 1/2 sum_{alpha in R} k_alpha <alpha,xi> (p - p o s_alpha)/<alpha,.>
///
/// The difference p - p o s_alpha vanishes on alpha-perp, so the division is
/// exact; a nonzero remainder is an arithmetic bug and throws internal_error.
inline Poly dunkl_T(const RootSystem& rs, const Multiplicity& k, const RatVec& xi,
                    const Poly& p) {
  Poly out = p.derivative(xi);
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    const Rational& ka = k.of_root(rs, static_cast<int>(i));
    if (ka == 0) continue;
    Rational axi = dot(rs.roots[i], xi);
    if (axi == 0) continue;
    Poly diff = p - p.substitute_linear(rs.reflection(static_cast<int>(i)).matrix);
    if (diff.is_zero()) continue;
    out += diff.divide_by_linear(rs.roots[i]) * (ka * axi / 2);
  }
  return out;
}

inline Poly dunkl_T(const RootSystem& rs, const Multiplicity& k, int direction, const Poly& p) {
  RatVec xi(rs.ambient_dim, Rational(0));
  xi[direction] = 1;
  return dunkl_T(rs, k, xi, p);
}

/// p(T) q: substitutes T_{e_i} for x_i in p and applies to q.
/// The Dunkl operators commute, so evaluation order does not matter.
inline Poly apply_poly_op(const RootSystem& rs, const Multiplicity& k, const Poly& p,
                          const Poly& q) {
  Poly out(q.dim());
  for (auto& [m, c] : p.terms()) {
    Poly t = q * c;
    for (int i = 0; i < p.dim(); ++i)
      for (int e = 0; e < m[i]; ++e) t = dunkl_T(rs, k, i, t);
    out += t;
  }
  return out;
}

/// Dunkl Laplacian <T,T> applied to q.
inline Poly dunkl_laplacian(const RootSystem& rs, const Multiplicity& k, const Poly& q) {
  return apply_poly_op(rs, k, Poly::norm_squared(rs.ambient_dim), q);
}

}  // namespace dunkl
