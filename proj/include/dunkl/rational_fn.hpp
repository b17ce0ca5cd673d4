#pragma once

#include <Eigen/Dense>

#include <map>
#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// Rational function of the form sum_i q_i(x) / prod_j p(w_{i,j} x) for a fixed
/// base polynomial p and group elements w. Closed under Dunkl operators: one
/// application doubles every denominator word.
class GroupRationalFn {
 public:
  struct Term {
    Poly numerator;
    std::vector<GroupElement> word;  // denominator prod_j p(w_j x)
  };

  GroupRationalFn(Poly base, std::vector<Term> terms)
      : base_(std::move(base)), terms_(std::move(terms)) {}

  /// q(x) / p(x).
  static GroupRationalFn quotient(Poly numerator, Poly base, int ambient_dim) {
    GroupElement id{rat_identity(ambient_dim)};
    return GroupRationalFn(std::move(base), {{std::move(numerator), {id}}});
  }
  /// Denominator-free q(x)/1 over base p.
  static GroupRationalFn polynomial(Poly numerator, Poly base) {
    return GroupRationalFn(std::move(base), {{std::move(numerator), {}}});
  }

  const Poly& base() const { return base_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Max numerator degree and max word length over terms.
  int max_numerator_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.numerator.degree());
    return d;
  }
  size_t max_word_length() const {
    size_t l = 0;
    for (const auto& t : terms_) l = std::max(l, t.word.size());
    return l;
  }

  /// Merges terms sharing the same (order-insensitive) denominator word.
  void simplify() {
    std::map<std::vector<RatMat>, Poly> merged;
    for (auto& t : terms_) {
      std::vector<RatMat> key;
      for (const auto& w : t.word) key.push_back(w.matrix);
      std::sort(key.begin(), key.end());
      auto it = merged.find(key);
      if (it == merged.end())
        merged.emplace(std::move(key), t.numerator);
      else
        it->second += t.numerator;
    }
    std::vector<Term> out;
    for (auto& [key, num] : merged) {
      if (num.is_zero()) continue;
      std::vector<GroupElement> word;
      for (auto& m : key) word.push_back({m});
      out.push_back({std::move(num), std::move(word)});
    }
    terms_ = std::move(out);
  }

  double eval(const Eigen::VectorXd& x) const {
    std::vector<double> xv(x.data(), x.data() + x.size());
    double s = 0;
    for (const auto& t : terms_) {
      double den = 1;
      for (const auto& w : t.word) {
        Eigen::VectorXd wx = w.apply(x);
        std::vector<double> wxv(wx.data(), wx.data() + wx.size());
        den *= base_.eval_at(wxv);
      }
      s += t.numerator.eval_at(xv) / den;
    }
    return s;
  }

 private:
  Poly base_;
  std::vector<Term> terms_;
};

/// Dunkl operator on a group rational function; exact quotient rule.
/// Every output denominator word has twice the input length.
inline GroupRationalFn dunkl_T_rational(const RootSystem& rs, const Multiplicity& k,
                                        const RatVec& xi, const GroupRationalFn& f) {
  const Poly& p = f.base();
  std::vector<GroupRationalFn::Term> out;
  for (const auto& t : f.terms()) {
    // denominator P = prod p(w x) as a polynomial
    Poly big = Poly::constant(p.dim(), 1);
    for (const auto& w : t.word) big = big * p.substitute_linear(w.matrix);
    // (dq P - q dP) / P^2
    {
      Poly num = t.numerator.derivative(xi) * big - t.numerator * big.derivative(xi);
      std::vector<GroupElement> word = t.word;
      word.insert(word.end(), t.word.begin(), t.word.end());
      if (!num.is_zero()) out.push_back({std::move(num), std::move(word)});
    }
    // reflection differences: [q P(s x) - q(s x) P] / (<a,x> P P(s .))
    for (size_t r = 0; r < rs.roots.size(); ++r) {
      const Rational& ka = k.of_root(rs, static_cast<int>(r));
      if (ka == 0) continue;
      Rational axi = dot(rs.roots[r], xi);
      if (axi == 0) continue;
      GroupElement s = rs.reflection(static_cast<int>(r));
      Poly diff = t.numerator * big.substitute_linear(s.matrix) -
                  t.numerator.substitute_linear(s.matrix) * big;
      if (diff.is_zero()) continue;
      Poly num = diff.divide_by_linear(rs.roots[r]) * (ka * axi / 2);
      std::vector<GroupElement> word = t.word;
      for (const auto& w : t.word) word.push_back({mat_mul(w.matrix, s.matrix)});
      out.push_back({std::move(num), std::move(word)});
    }
  }
  GroupRationalFn g(f.base(), std::move(out));
  g.simplify();
  return g;
}

inline GroupRationalFn dunkl_T_rational(const RootSystem& rs, const Multiplicity& k, int direction,
                                        const GroupRationalFn& f) {
  RatVec xi(rs.ambient_dim, Rational(0));
  xi[direction] = 1;
  return dunkl_T_rational(rs, k, xi, f);
}

}  // namespace dunkl
