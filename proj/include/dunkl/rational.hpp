#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;

/// Thrown when an exact-arithmetic invariant is violated (a bug, not bad input).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

/// Parses "p", "p/q" or a plain decimal like "0.5".
inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num(s.substr(0, slash));
    Rational den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return num / den;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Rational num(digits);
    Rational den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return num / den;
  }
  return Rational(s);
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  RatMat c(n, RatVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline RatMat rat_identity(size_t n) {
  RatMat m(n, RatVec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Solves the (possibly overdetermined, consistent) system A x = b for each
/// column of b by exact Gaussian elimination. Throws internal_error when the
/// system is singular or inconsistent.
inline RatMat solve_exact(RatMat a, RatMat b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  const size_t nrhs = b.empty() ? 0 : b[0].size();
  if (b.size() != rows) throw std::invalid_argument("solve_exact: shape mismatch");
  std::vector<size_t> pivot_row(cols);
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) throw internal_error("solve_exact: singular system");
    std::swap(a[p], a[rank]);
    std::swap(b[p], b[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
      for (size_t j = 0; j < nrhs; ++j) b[r][j] -= f * b[rank][j];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  if (rank < cols) throw internal_error("solve_exact: rank deficient");
  // leftover rows must have been annihilated together with their rhs
  for (size_t r = rank; r < rows; ++r) {
    for (size_t j = 0; j < nrhs; ++j)
      if (b[r][j] != 0) throw internal_error("solve_exact: inconsistent system");
  }
  RatMat x(cols, RatVec(nrhs));
  for (size_t c = 0; c < cols; ++c) {
    size_t r = pivot_row[c];
    for (size_t j = 0; j < nrhs; ++j) x[c][j] = b[r][j] / a[r][c];
  }
  return x;
}

inline RatMat invert_exact(const RatMat& a) { return solve_exact(a, rat_identity(a.size())); }

}  // namespace dunkl
