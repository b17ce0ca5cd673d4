#pragma once

#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Graded lexicographic order: lower total degree first, then lexicographic
/// with earlier variables weighing more. The map's last entry is the leading term.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // same degree: a < b iff a is lexicographically smaller, reading x1 as
    // the most significant variable
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit Poly(int dim = 0) : dim_(dim) {}

  static Poly constant(int dim, const Rational& c) {
    Poly p(dim);
    if (c != 0) p.terms_[Monomial(dim, 0)] = c;
    return p;
  }
  static Poly variable(int dim, int i, const Rational& c = 1) {
    Poly p(dim);
    Monomial m(dim, 0);
    m[i] = 1;
    if (c != 0) p.terms_[m] = c;
    return p;
  }
  static Poly monomial(int dim, Monomial m, const Rational& c) {
    Poly p(dim);
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
  }
  /// The linear form x |-> <a, x>.
  static Poly linear_form(const RatVec& a) {
    Poly p(static_cast<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0) {
        Monomial m(a.size(), 0);
        m[i] = 1;
        p.terms_[m] = a[i];
      }
    }
    return p;
  }
  /// |x|^2 as a polynomial.
  static Poly norm_squared(int dim) {
    Poly p(dim);
    for (int i = 0; i < dim; ++i) {
      Monomial m(dim, 0);
      m[i] = 2;
      p.terms_[m] = 1;
    }
    return p;
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_dim(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_dim(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_dim(b);
    Poly r(a.dim_);
    for (auto& [ma, ca] : a.terms_) {
      for (auto& [mb, cb] : b.terms_) {
        Monomial m(a.dim_);
        for (int i = 0; i < a.dim_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  friend Poly operator*(Poly a, const Rational& c) {
    if (c == 0) return Poly(a.dim_);
    for (auto& [m, v] : a.terms_) v *= c;
    return a;
  }
  friend Poly operator*(const Rational& c, Poly a) { return std::move(a) * c; }
  friend Poly operator-(Poly a) { return std::move(a) * Rational(-1); }

  bool operator==(const Poly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  Poly derivative(int i) const {
    Poly r(dim_);
    for (auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial d = m;
      d[i] -= 1;
      r.add_term(d, c * m[i]);
    }
    return r;
  }
  /// Directional derivative along xi.
  Poly derivative(const RatVec& xi) const {
    Poly r(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (xi[i] != 0) r += derivative(i) * xi[i];
    }
    return r;
  }

  Poly homogeneous_part(int n) const {
    Poly r(dim_);
    for (auto& [m, c] : terms_)
      if (total_degree(m) == n) r.terms_[m] = c;
    return r;
  }

  /// Composition with the linear map x -> M x.
  Poly substitute_linear(const RatMat& m) const {
    std::vector<Poly> images;
    images.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
      RatVec row(dim_);
      for (int j = 0; j < dim_; ++j) row[j] = m[i][j];
      images.push_back(linear_form(row));
    }
    return substitute(images, dim_);
  }

  /// Substitutes each variable x_i by images[i] (a polynomial in out_dim variables).
  Poly substitute(const std::vector<Poly>& images, int out_dim) const {
    // cache powers of each image
    std::vector<std::vector<Poly>> pow(dim_);
    for (int i = 0; i < dim_; ++i) pow[i].push_back(Poly::constant(out_dim, 1));
    Poly r(out_dim);
    for (auto& [m, c] : terms_) {
      Poly t = Poly::constant(out_dim, c);
      for (int i = 0; i < dim_; ++i) {
        if (m[i] == 0) continue;
        while (static_cast<int>(pow[i].size()) <= m[i]) pow[i].push_back(pow[i].back() * images[i]);
        t = t * pow[i][m[i]];
      }
      r += t;
    }
    return r;
  }

  Rational eval(const RatVec& x) const {
    Rational s = 0;
    for (auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < dim_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= x[i];
      s += t;
    }
    return s;
  }

  template <typename Scalar>
  Scalar eval_at(const std::vector<Scalar>& x) const {
    Scalar s = Scalar(0);
    for (auto& [m, c] : terms_) {
      Scalar t = Scalar(to_double(c));
      for (int i = 0; i < dim_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= x[i];
      s += t;
    }
    return s;
  }

  /// Evaluates p(i x) at a real point: the Fourier-side symbol of p(T),
  /// since the transform turns T_xi into multiplication by i<xi,.>.
  std::complex<double> eval_i(const std::vector<double>& x) const {
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> s = 0.0;
    for (auto& [m, c] : terms_) {
      double t = to_double(c);
      for (int i = 0; i < dim_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= x[i];
      s += powers[total_degree(m) % 4] * t;
    }
    return s;
  }

  /// Evaluates p(-i x) at a real point, i.e. the exact substitution
  /// x_j -> -i x_j term by term.
  std::complex<double> eval_minus_i(const std::vector<double>& x) const {
    static const std::complex<double> powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    std::complex<double> s = 0.0;
    for (auto& [m, c] : terms_) {
      double t = to_double(c);
      for (int i = 0; i < dim_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= x[i];
      s += powers[total_degree(m) % 4] * t;
    }
    return s;
  }

  /// Exact division by a linear form <a, x>. The quotient must be exact;
  /// a nonzero remainder throws internal_error.
  Poly divide_by_linear(const RatVec& a) const {
    int pivot = -1;
    for (int i = 0; i < dim_; ++i) {
      if (a[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("divide_by_linear: zero form");
    Poly lin = linear_form(a);
    Poly rem = *this;
    Poly quot(dim_);
    while (!rem.terms_.empty()) {
      auto lead = std::prev(rem.terms_.end());
      const Monomial& m = lead->first;
      if (m[pivot] == 0) throw internal_error("divide_by_linear: nonzero remainder");
      Monomial q = m;
      q[pivot] -= 1;
      Rational c = lead->second / a[pivot];
      Poly t = Poly::monomial(dim_, q, c);
      quot += t;
      rem -= t * lin;
    }
    return quot;
  }

 private:
  void check_dim(const Poly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("Poly: dimension mismatch");
  }
  int dim_;
  TermMap terms_;
};

/// Monomial basis of homogeneous polynomials of degree n in dim variables,
/// listed in graded-lex order.
inline std::vector<Monomial> monomial_basis(int dim, int n) {
  std::vector<Monomial> out;
  Monomial m(dim, 0);
  // enumerate all compositions of n into dim parts
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == dim - 1) {
      m[pos] = rem;
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      m[pos] = e;
      rec(pos + 1, rem - e);
    }
  };
  if (dim == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(0, n);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

}  // namespace dunkl
