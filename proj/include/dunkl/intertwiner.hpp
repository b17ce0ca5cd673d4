#pragma once

#include <vector>

#include "dunkl/dunkl_op.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// Degree-preserving linear map on polynomials, stored as one exact matrix per
/// homogeneous degree in the graded-lex monomial basis. Degree 0 is the 1x1
/// identity for the intertwiner (V1 = 1).
class GradedLinearMap {
 public:
  GradedLinearMap() = default;
  GradedLinearMap(int dim, std::vector<RatMat> blocks) : dim_(dim), blocks_(std::move(blocks)) {}

  int dim() const { return dim_; }
  int max_degree() const { return static_cast<int>(blocks_.size()) - 1; }
  const RatMat& block(int n) const { return blocks_.at(n); }

  /// Applies the map degree by degree.
  Poly apply(const Poly& p) const {
    if (p.degree() > max_degree())
      throw std::invalid_argument("GradedLinearMap: degree exceeds built range");
    Poly out(dim_);
    for (int n = 0; n <= p.degree(); ++n) {
      Poly part = p.homogeneous_part(n);
      if (part.is_zero()) continue;
      auto basis = monomial_basis(dim_, n);
      RatVec coeffs(basis.size(), Rational(0));
      for (size_t j = 0; j < basis.size(); ++j) coeffs[j] = part.coeff(basis[j]);
      RatVec img = mat_vec(blocks_[n], coeffs);
      for (size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], img[i]);
    }
    return out;
  }

  GradedLinearMap inverse() const {
    std::vector<RatMat> inv;
    inv.reserve(blocks_.size());
    for (const auto& b : blocks_) inv.push_back(invert_exact(b));
    return GradedLinearMap(dim_, std::move(inv));
  }

 private:
  int dim_ = 0;
  std::vector<RatMat> blocks_;
};

/// Matrix of a linear operator P_n -> P_{n-1} in the graded-lex monomial bases.
template <typename Op>
inline RatMat operator_matrix(int dim, int n, Op&& op) {
  auto src = monomial_basis(dim, n);
  auto dst = monomial_basis(dim, n - 1);
  RatMat m(dst.size(), RatVec(src.size(), Rational(0)));
  for (size_t j = 0; j < src.size(); ++j) {
    Poly img = op(Poly::monomial(dim, src[j], 1));
    for (size_t i = 0; i < dst.size(); ++i) m[i][j] = img.coeff(dst[i]);
  }
  return m;
}

/// Builds Dunkl's intertwining operator V up to degree n_max by solving the
/// defining relations T_xi V = V d_xi exactly, degree by degree.
///
/// At each degree the stacked system over all coordinate directions is solved
/// by exact elimination; for k >= 0 it is uniquely solvable, so a singular
/// system indicates a bug and surfaces as internal_error.
inline GradedLinearMap build_intertwiner(const RootSystem& rs, const Multiplicity& k, int n_max) {
  const int dim = rs.ambient_dim;
  std::vector<RatMat> blocks;
  blocks.push_back(RatMat{{Rational(1)}});  // V1 = 1
  for (int n = 1; n <= n_max; ++n) {
    auto below = monomial_basis(dim, n - 1);
    auto here = monomial_basis(dim, n);
    // stacked system: [T_1; ...; T_d] V_n = [V_{n-1} D_1; ...; V_{n-1} D_d]
    RatMat a, b;
    for (int i = 0; i < dim; ++i) {
      RatMat ti = operator_matrix(dim, n, [&](const Poly& p) { return dunkl_T(rs, k, i, p); });
      RatMat di = operator_matrix(dim, n, [&](const Poly& p) { return p.derivative(i); });
      RatMat rhs = mat_mul(blocks[n - 1], di);
      for (size_t r = 0; r < ti.size(); ++r) {
        a.push_back(ti[r]);
        b.push_back(rhs[r]);
      }
    }
    blocks.push_back(solve_exact(std::move(a), std::move(b)));
  }
  return GradedLinearMap(dim, std::move(blocks));
}

/// Generalized translation on polynomials: tau p (x, y) = (V^x V^y)(V^{-1}p)(x+y),
/// returned as a polynomial in 2*dim variables (x first, then y).
inline Poly translate_poly(const GradedLinearMap& v, const GradedLinearMap& v_inv, const Poly& p) {
  const int d = p.dim();
  Poly q = v_inv.apply(p);
  // substitute x -> x + y into q
  std::vector<Poly> images;
  for (int i = 0; i < d; ++i) {
    Poly s(2 * d);
    Monomial mx(2 * d, 0), my(2 * d, 0);
    mx[i] = 1;
    my[d + i] = 1;
    s.add_term(mx, 1);
    s.add_term(my, 1);
    images.push_back(s);
  }
  Poly shifted = q.substitute(images, 2 * d);
  // apply V in x and in y separately: each bivariate monomial splits as
  // x^a y^b and maps to (V x^a)(x) * (V y^b)(y)
  Poly out(2 * d);
  for (auto& [m, c] : shifted.terms()) {
    Monomial ax(d), by(d);
    for (int i = 0; i < d; ++i) {
      ax[i] = m[i];
      by[i] = m[d + i];
    }
    Poly vx = v.apply(Poly::monomial(d, ax, 1));
    Poly vy = v.apply(Poly::monomial(d, by, 1));
    for (auto& [mx, cx] : vx.terms()) {
      for (auto& [my, cy] : vy.terms()) {
        Monomial joint(2 * d, 0);
        for (int i = 0; i < d; ++i) {
          joint[i] = mx[i];
          joint[d + i] = my[i];
        }
        out.add_term(joint, c * cx * cy);
      }
    }
  }
  return out;
}

}  // namespace dunkl
