#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

#include "dunkl/grid.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

namespace detail {

/// int_R e^{-t^2/2} |t|^e dt, panels graded toward the origin so fractional
/// exponents converge; level scales the resolution.
inline double radial_gauss_moment(double e, int level = 1) {
  std::vector<double> breaks = graded_breaks(1.0, 24 * level, 0.2);
  std::vector<double> outer = uniform_breaks(1.0, 14.0, 13 * level);
  breaks.insert(breaks.end(), outer.begin() + 1, outer.end());
  Rule1D r = composite_legendre(breaks, 12);
  std::vector<double> t(r.nodes.size());
  for (size_t i = 0; i < r.nodes.size(); ++i)
    t[i] = r.weights[i] * std::exp(-0.5 * r.nodes[i] * r.nodes[i]) * std::pow(r.nodes[i], e);
  return 2.0 * pairwise_sum(t);  // even integrand
}

/// Parallel classes of the positive roots: direction (unit), squared length,
/// and summed multiplicity exponent over the +-alpha pair.
struct RootClass {
  Eigen::VectorXd dir;
  double length;
  double exponent;  // 2 k_alpha
};

inline std::vector<RootClass> root_classes(const RootSystem& rs, const Multiplicity& k) {
  std::vector<RootClass> out;
  for (int p : rs.positive_roots) {
    Eigen::VectorXd u(rs.ambient_dim);
    for (int i = 0; i < rs.ambient_dim; ++i) u(i) = to_double(rs.roots[p][i]);
    double len = u.norm();
    out.push_back({u / len, len, 2.0 * to_double(k.of_root(rs, p))});
  }
  return out;
}

inline bool pairwise_orthogonal(const std::vector<RootClass>& cls) {
  for (size_t a = 0; a < cls.size(); ++a)
    for (size_t b = a + 1; b < cls.size(); ++b)
      if (std::abs(cls[a].dir.dot(cls[b].dir)) > 1e-12) return false;
  return true;
}

/// Planar Gaussian omega-integral over span(R) of rank 2, in polar
/// coordinates with angular panels split at the root hyperplane angles.
inline double planar_gauss_integral(const RootSystem& rs, const Multiplicity& k,
                                    const Eigen::MatrixXd& basis, int level = 1) {
  double total_k = to_double(k.total(rs));
  // radial: int_0^inf e^{-r^2/2} r^{K+1} dr
  std::vector<double> rb = graded_breaks(1.0, 24 * level, 0.2);
  std::vector<double> outer = uniform_breaks(1.0, 14.0, 13 * level);
  rb.insert(rb.end(), outer.begin() + 1, outer.end());
  Rule1D rad = composite_legendre(rb, 12);
  std::vector<double> rt(rad.nodes.size());
  for (size_t i = 0; i < rad.nodes.size(); ++i)
    rt[i] = rad.weights[i] * std::exp(-0.5 * rad.nodes[i] * rad.nodes[i]) *
            std::pow(rad.nodes[i], total_k + 1.0);
  double radial = pairwise_sum(rt);
  // angular panels between the zeros of <alpha, x(theta)>
  std::vector<double> cuts;
  for (int p : rs.positive_roots) {
    double a = 0, b = 0;
    for (int i = 0; i < rs.ambient_dim; ++i) {
      a += to_double(rs.roots[p][i]) * basis(i, 0);
      b += to_double(rs.roots[p][i]) * basis(i, 1);
    }
    double t0 = std::atan2(-a, b);  // a cos t + b sin t = 0
    for (double t : {t0, t0 + M_PI, t0 + 2 * M_PI, t0 - M_PI})
      if (t >= 0 && t < 2 * M_PI) cuts.push_back(t);
  }
  cuts.push_back(0);
  cuts.push_back(2 * M_PI);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             cuts.end());
  std::vector<double> breaks;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    std::vector<double> sub = uniform_breaks(cuts[i], cuts[i + 1], 4 * level);
    breaks.insert(breaks.end(), sub.begin() + (i == 0 ? 0 : 1), sub.end());
  }
  Rule1D ang = composite_legendre(breaks, 14);
  std::vector<double> at(ang.nodes.size());
  for (size_t i = 0; i < ang.nodes.size(); ++i) {
    Eigen::VectorXd x =
        std::cos(ang.nodes[i]) * basis.col(0) + std::sin(ang.nodes[i]) * basis.col(1);
    at[i] = ang.weights[i] * weight_omega(rs, k, x);
  }
  return radial * pairwise_sum(at);
}

}  // namespace detail

/// Macdonald-Mehta constant c_k = int e^{-|x|^2/2} omega(x) dx, computed by
/// quadrature (no gamma functions). Supported: root systems whose positive
/// roots are pairwise orthogonal (products of rank-one pieces), and systems
/// whose roots span a plane (polar route). level scales the resolution.
inline double mehta_constant(const RootSystem& rs, const Multiplicity& k, int level = 1) {
  double g1 = detail::radial_gauss_moment(0.0, level);  // int e^{-t^2/2} dt
  auto cls = detail::root_classes(rs, k);
  if (cls.empty() || k.all_zero()) return std::pow(g1, rs.ambient_dim);
  if (detail::pairwise_orthogonal(cls)) {
    double c = std::pow(g1, rs.ambient_dim - static_cast<int>(cls.size()));
    for (const auto& rc : cls)
      c *= std::pow(rc.length, rc.exponent) * detail::radial_gauss_moment(rc.exponent, level);
    return c;
  }
  Eigen::MatrixXd basis = rs.root_span_basis();
  if (basis.cols() == 2)
    return std::pow(g1, rs.ambient_dim - 2) * detail::planar_gauss_integral(rs, k, basis, level);
  throw std::invalid_argument("mehta_constant: unsupported root system geometry");
}

/// Gamma-function closed form for the same constant (used as table oracle).
inline double mehta_closed_form(const RootSystem& rs, const Multiplicity& k) {
  auto cls = detail::root_classes(rs, k);
  double g1 = std::sqrt(2 * M_PI);
  if (cls.empty() || k.all_zero()) return std::pow(g1, rs.ambient_dim);
  if (detail::pairwise_orthogonal(cls)) {
    double c = std::pow(g1, rs.ambient_dim - static_cast<int>(cls.size()));
    for (const auto& rc : cls) {
      double kk = rc.exponent / 2;
      c *= std::pow(rc.length, rc.exponent) * std::pow(2.0, kk + 0.5) * std::tgamma(kk + 0.5);
    }
    return c;
  }
  if (rs.name == "A") {
    int n = rs.ambient_dim;  // A(n-1) in R^n
    double kk = to_double(k.per_orbit()[0]);
    double c = std::pow(2 * M_PI, n / 2.0);
    for (int j = 1; j <= n; ++j) c *= std::tgamma(1 + j * kk) / std::tgamma(1 + kk);
    return c;
  }
  throw std::invalid_argument("mehta_closed_form: unsupported root system geometry");
}

/// Dunkl transform on a fixed grid, with the frequency grid equal to the
/// space grid. K(a, j) = E(-i xi_a, x_j).
///
///   forward:  F f(xi_a) = (1/c_k) sum_j K(a,j) f_j w_j
///   inverse:  F^{-1} g(x_j) = F g(-x_j) = (1/c_k) sum_a conj(K(a,j)) g_a w_a
class TransformPlan {
 public:
  TransformPlan(const RootSystem& rs, const Multiplicity& k, Grid grid, KernelEvaluator ev,
                double ck)
      : rs_(rs), k_(k), grid_(std::move(grid)), ev_(std::move(ev)), ck_(ck) {
    const Eigen::Index n = static_cast<Eigen::Index>(grid_.size());
    kmat_.resize(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      Eigen::VectorXcd lam = Complex(0, -1) * grid_.nodes[a].cast<Complex>();
      for (Eigen::Index j = 0; j < n; ++j) kmat_(a, j) = ev_(lam, grid_.nodes[j]);
    }
  }

  static TransformPlan standard(const RootSystem& rs, const Multiplicity& k, double half,
                                int panels, int nodes_per_panel) {
    return TransformPlan(rs, k, box_grid(rs, k, half, panels, nodes_per_panel),
                         KernelEvaluator::automatic(rs, k), mehta_constant(rs, k));
  }

  const Grid& grid() const { return grid_; }
  const Grid& freq_grid() const { return grid_; }  // frequency grid == space grid
  const RootSystem& root_system() const { return rs_; }
  const Multiplicity& multiplicity() const { return k_; }
  const KernelEvaluator& evaluator() const { return ev_; }
  double mehta() const { return ck_; }

  Eigen::VectorXcd forward(const Eigen::VectorXcd& f) const {
    return kmat_ * weighted(f) / ck_;
  }
  Eigen::VectorXcd inverse(const Eigen::VectorXcd& g) const {
    return kmat_.adjoint() * weighted(g) / ck_;
  }

  /// F^{-1} g at an arbitrary point.
  Complex inverse_at(const Eigen::VectorXcd& g, const Eigen::VectorXd& y) const {
    Complex s = 0;
    for (size_t a = 0; a < grid_.size(); ++a) {
      Eigen::VectorXcd lam = Complex(0, -1) * grid_.nodes[a].cast<Complex>();
      s += std::conj(ev_(lam, y)) * g(static_cast<Eigen::Index>(a)) * grid_.weights[a];
    }
    return s / ck_;
  }

  /// Multiplier values E(i x, xi_a) of the generalized translation tau_x.
  Eigen::VectorXcd translation_multiplier(const Eigen::VectorXd& x) const {
    Eigen::VectorXcd m(static_cast<Eigen::Index>(grid_.size()));
    for (size_t a = 0; a < grid_.size(); ++a) {
      Eigen::VectorXcd lam = Complex(0, -1) * grid_.nodes[a].cast<Complex>();
      m(static_cast<Eigen::Index>(a)) = std::conj(ev_(lam, x));
    }
    return m;
  }

  /// tau_x f = F^{-1}( E(i x, .) F f ).
  Eigen::VectorXcd translate(const Eigen::VectorXd& x, const Eigen::VectorXcd& f) const {
    return inverse(translation_multiplier(x).cwiseProduct(forward(f)));
  }

  /// tau_x f at an arbitrary point y.
  Complex translate_at(const Eigen::VectorXd& x, const Eigen::VectorXcd& f,
                       const Eigen::VectorXd& y) const {
    return inverse_at(translation_multiplier(x).cwiseProduct(forward(f)), y);
  }

  /// Dunkl convolution (f * g)(y) = int (tau_y f)(-x) g(x) omega dx, computed
  /// spectrally; with this plain (delta-unital) definition the transform
  /// identity carries the constant: F(f * g) = c_k F f . F g.
  Eigen::VectorXcd convolve(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) const {
    return inverse(ck_ * forward(f).cwiseProduct(forward(g)));
  }

  double l2(const Eigen::VectorXcd& f) const { return l2_norm(grid_, f); }
  double freq_l2(const Eigen::VectorXcd& g) const { return l2_norm(grid_, g); }

 private:
  Eigen::VectorXcd weighted(const Eigen::VectorXcd& f) const {
    Eigen::VectorXcd v = f;
    for (size_t i = 0; i < grid_.size(); ++i) v(static_cast<Eigen::Index>(i)) *= grid_.weights[i];
    return v;
  }

  RootSystem rs_;
  Multiplicity k_;
  Grid grid_;
  KernelEvaluator ev_;
  double ck_;
  Eigen::MatrixXcd kmat_;
};

/// Smooth bump supported in the unit ball, normalized later by its measured
/// L^1(omega) mass.
inline double bump_profile(const Eigen::VectorXd& x) {
  double r2 = x.squaredNorm();
  return r2 < 1.0 ? std::exp(-1.0 / (1.0 - r2)) : 0.0;
}

/// Mollifier psi_eps = eps^{-gamma} psi(./eps) with gamma = dim + (1/2) sum k,
/// renormalized on the grid to unit L^1(omega) mass (the scaling exponent
/// alone does not preserve the omega-mass exactly).
inline Eigen::VectorXcd mollifier(const Grid& g, const RootSystem& rs, const Multiplicity& k,
                                  double eps) {
  double gamma = rs.ambient_dim + 0.5 * to_double(k.total(rs));
  Eigen::VectorXcd v = sample(g, [&](const Eigen::VectorXd& x) {
    return std::pow(eps, -gamma) * bump_profile(x / eps);
  });
  Complex mass = integrate(g, v);
  return v / mass;
}

struct SupportReport {
  double outside_mass_ratio;
  double threshold;
  bool pass;
};

namespace detail {
template <typename Allowed>
inline SupportReport outside_mass(const Grid& g, const Eigen::VectorXcd& v, double threshold,
                                  Allowed&& allowed) {
  std::vector<double> out(g.size()), tot(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    double m = std::abs(v(static_cast<Eigen::Index>(i))) * g.weights[i];
    tot[i] = m;
    out[i] = allowed(g.nodes[i]) ? 0.0 : m;
  }
  double ratio = pairwise_sum(out) / pairwise_sum(tot);
  return {ratio, threshold, ratio <= threshold};
}
}  // namespace detail

/// supp(tau_x f) subset W.B_r(-x), for f supported in B_r(0); region inflated
/// by delta (one grid spacing).
inline SupportReport verify_translation_support(const Grid& g, const Eigen::VectorXcd& tau_f,
                                                const std::vector<GroupElement>& w,
                                                const Eigen::VectorXd& x, double r, double delta,
                                                double threshold) {
  return detail::outside_mass(g, tau_f, threshold, [&](const Eigen::VectorXd& y) {
    return in_band(w, y, x, r + delta);  // exists w: |y + w x| <= r + delta
  });
}

/// supp(f * g) subset B_r(0) + W.supp(g), with supp(g) = B_{g_radius}(g_center).
inline SupportReport verify_convolution_support(const Grid& g, const Eigen::VectorXcd& conv,
                                                const std::vector<GroupElement>& w,
                                                const Eigen::VectorXd& g_center, double g_radius,
                                                double r, double delta, double threshold) {
  auto centers = orbit(w, g_center);
  return detail::outside_mass(g, conv, threshold, [&](const Eigen::VectorXd& y) {
    for (const auto& c : centers)
      if ((y - c).norm() <= r + g_radius + delta) return true;
    return false;
  });
}

/// Hull variant: supp(f * g) subset co(W.supp f) + co(W.supp g).
inline SupportReport verify_convolution_support_hull(
    const Grid& g, const Eigen::VectorXcd& conv, const std::vector<GroupElement>& w,
    const Eigen::VectorXd& f_center, double f_radius, const Eigen::VectorXd& g_center,
    double g_radius, double delta, double threshold) {
  auto verts = hull_sum(orbit_hull(w, f_center), orbit_hull(w, g_center));
  double pad = f_radius + g_radius + delta;
  return detail::outside_mass(g, conv, threshold, [&](const Eigen::VectorXd& y) {
    return dist_to_hull(verts, y) <= pad;
  });
}

}  // namespace dunkl
