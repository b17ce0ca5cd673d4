#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dunkl {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch: nodes/weights from a symmetric Jacobi matrix.
inline Rule1D golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                           double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) j(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = j(i + 1, i) = offdiag[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  Rule1D r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v * v;
  }
  return r;
}

/// Gauss-Legendre on [-1, 1].
inline Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  std::vector<double> d(n, 0.0), e(n - 1);
  for (int i = 1; i < n; ++i) e[i - 1] = i / std::sqrt(4.0 * i * i - 1.0);
  return golub_welsch(d, e, 2.0);
}

/// Gauss-Jacobi on [-1, 1] with weight (1-x)^a (1+x)^b, a,b > -1.
inline Rule1D gauss_jacobi(int n, double a, double b) {
  if (n < 1 || a <= -1 || b <= -1) throw std::invalid_argument("gauss_jacobi: bad parameters");
  std::vector<double> d(n), e(n - 1);
  double ab = a + b;
  d[0] = (b - a) / (ab + 2);
  for (int i = 1; i < n; ++i) {
    double s = 2.0 * i + ab;
    d[i] = (b * b - a * a) / (s * (s + 2));
  }
  if (n > 1) e[0] = std::sqrt(4 * (1 + a) * (1 + b) / ((2 + ab) * (2 + ab) * (3 + ab)));
  for (int i = 2; i < n; ++i) {
    double s = 2.0 * i + ab;
    e[i - 1] =
        std::sqrt(4.0 * i * (i + a) * (i + b) * (i + ab) / (s * s * (s + 1) * (s - 1)));
  }
  double mu0 = std::pow(2.0, ab + 1) * std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) -
                                                std::lgamma(ab + 2));
  return golub_welsch(d, e, mu0);
}

/// Gauss-Legendre rule mapped to [lo, hi].
inline Rule1D legendre_on(double lo, double hi, int n) {
  Rule1D base = gauss_legendre(n);
  Rule1D r;
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i) {
    r.nodes.push_back(mid + half * base.nodes[i]);
    r.weights.push_back(half * base.weights[i]);
  }
  return r;
}

/// Composite Gauss-Legendre over the given panel breakpoints.
inline Rule1D composite_legendre(const std::vector<double>& breaks, int nodes_per_panel) {
  Rule1D r;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    Rule1D p = legendre_on(breaks[i], breaks[i + 1], nodes_per_panel);
    r.nodes.insert(r.nodes.end(), p.nodes.begin(), p.nodes.end());
    r.weights.insert(r.weights.end(), p.weights.begin(), p.weights.end());
  }
  return r;
}

/// Panel breakpoints on [0, hi], geometrically graded toward 0.
/// Used for endpoint power singularities x^sigma with sigma > -1.
inline std::vector<double> graded_breaks(double hi, int panels, double ratio = 0.4) {
  std::vector<double> b{hi};
  double x = hi;
  for (int i = 1; i < panels; ++i) {
    x *= ratio;
    b.push_back(x);
  }
  b.push_back(0.0);
  std::reverse(b.begin(), b.end());
  return b;
}

/// Symmetric breakpoints on [-hi, hi] graded toward 0 from both sides.
inline std::vector<double> symmetric_graded_breaks(double hi, int panels, double ratio = 0.4) {
  std::vector<double> pos = graded_breaks(hi, panels, ratio);
  std::vector<double> b;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it)
    if (*it > 0) b.push_back(-*it);
  b.insert(b.end(), pos.begin(), pos.end());
  return b;
}

/// Uniform breakpoints.
inline std::vector<double> uniform_breaks(double lo, double hi, int panels) {
  std::vector<double> b;
  for (int i = 0; i <= panels; ++i) b.push_back(lo + (hi - lo) * i / panels);
  return b;
}

}  // namespace dunkl
