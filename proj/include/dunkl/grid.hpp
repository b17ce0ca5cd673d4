#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "dunkl/quadrature.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

/// Quadrature grid for omega-weighted integrals over a box-like domain.
/// `weights` already include the omega(x) factor; `lebesgue` and `omega`
/// are kept separately for diagnostics and unweighted integrals.
struct Grid {
  std::vector<Eigen::VectorXd> nodes;
  std::vector<double> lebesgue;
  std::vector<double> omega;
  std::vector<double> weights;  // lebesgue * omega
  double spacing = 0;           // panel width: support-inflation unit

  size_t size() const { return nodes.size(); }

  void finish(const RootSystem& rs, const Multiplicity& k) {
    omega.resize(nodes.size());
    weights.resize(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
      omega[i] = weight_omega(rs, k, nodes[i]);
      weights[i] = lebesgue[i] * omega[i];
    }
  }
};

/// Pairwise (tree) summation: deterministic and accurate regardless of
/// how the caller chunks work.
template <typename Scalar>
inline Scalar pairwise_sum(const std::vector<Scalar>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    Scalar s = Scalar(0);
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}
template <typename Scalar>
inline Scalar pairwise_sum(const std::vector<Scalar>& v) {
  return v.empty() ? Scalar(0) : pairwise_sum(v, 0, v.size());
}

/// Integral of grid values against omega dx.
inline std::complex<double> integrate(const Grid& g, const Eigen::VectorXcd& values) {
  std::vector<std::complex<double>> t(g.size());
  for (size_t i = 0; i < g.size(); ++i) t[i] = values(static_cast<Eigen::Index>(i)) * g.weights[i];
  return pairwise_sum(t);
}
inline double integrate_real(const Grid& g, const std::vector<double>& values) {
  std::vector<double> t(g.size());
  for (size_t i = 0; i < g.size(); ++i) t[i] = values[i] * g.weights[i];
  return pairwise_sum(t);
}

/// L^2(omega) norm of grid values.
inline double l2_norm(const Grid& g, const Eigen::VectorXcd& values) {
  std::vector<double> t(g.size());
  for (size_t i = 0; i < g.size(); ++i)
    t[i] = std::norm(values(static_cast<Eigen::Index>(i))) * g.weights[i];
  return std::sqrt(pairwise_sum(t));
}

/// Tensor-product composite Gauss-Legendre grid on [-half, half]^dim with
/// uniform panels. Adequate for integer multiplicities (omega polynomial).
inline Grid box_grid(const RootSystem& rs, const Multiplicity& k, double half, int panels,
                     int nodes_per_panel) {
  Rule1D axis = composite_legendre(uniform_breaks(-half, half, panels), nodes_per_panel);
  const int d = rs.ambient_dim;
  const size_t n1 = axis.nodes.size();
  size_t total = 1;
  for (int i = 0; i < d; ++i) total *= n1;
  Grid g;
  g.nodes.reserve(total);
  g.lebesgue.reserve(total);
  std::vector<size_t> idx(d, 0);
  for (size_t c = 0; c < total; ++c) {
    Eigen::VectorXd x(d);
    double w = 1;
    for (int i = 0; i < d; ++i) {
      x(i) = axis.nodes[idx[i]];
      w *= axis.weights[idx[i]];
    }
    g.nodes.push_back(x);
    g.lebesgue.push_back(w);
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[i] < n1) break;
      idx[i] = 0;
    }
  }
  g.spacing = 2 * half / panels;
  g.finish(rs, k);
  return g;
}

/// Sample of a scalar function on the grid nodes.
template <typename F>
inline Eigen::VectorXcd sample(const Grid& g, F&& f) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(g.size()));
  for (size_t i = 0; i < g.size(); ++i) v(static_cast<Eigen::Index>(i)) = f(g.nodes[i]);
  return v;
}

}  // namespace dunkl
