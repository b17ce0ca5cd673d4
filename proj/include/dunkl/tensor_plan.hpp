#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "dunkl/grid.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

/// Dunkl transform for root systems whose positive roots are pairwise
/// orthogonal: the kernel, the weight and the measure all factor along the
/// root directions plus the free orthogonal complement, so the transform is
/// a tensor product of one-dimensional transforms. This reaches much higher
/// per-axis resolution than a full kernel matrix, and the frequency box can
/// be chosen independently of the spatial box (sharply localized functions
/// need a much larger frequency range than spatial range).
class TensorPlan {
 public:
  struct Box {
    double half = 0;
    int panels = 0;
    int nodes_per_panel = 0;
  };

  struct Axis {
    Eigen::VectorXd direction;  // unit vector in ambient coordinates
    double k = 0;               // rank-one multiplicity (0 for free axes)
    double root_length = 0;     // |alpha| for root axes, 0 otherwise
    Rank1Kernel kernel{0.0};
    std::vector<double> nodes;      // spatial nodes
    std::vector<double> weights;    // lebesgue * (root_length |t|)^{2k}
    std::vector<double> fnodes;     // frequency nodes
    std::vector<double> fweights;   // lebesgue * (root_length |t|)^{2k}
    Eigen::MatrixXcd kmat;          // E(-i xi_a x_j), fnodes x nodes
    double ck = 1;                  // int e^{-t^2/2} (root_length |t|)^{2k} dt
  };

  TensorPlan(const RootSystem& rs, const Multiplicity& k, double half, int panels,
             int nodes_per_panel, int mehta_level = 1)
      : TensorPlan(rs, k, Box{half, panels, nodes_per_panel},
                   Box{half, panels, nodes_per_panel}, mehta_level) {}

  TensorPlan(const RootSystem& rs, const Multiplicity& k, Box space, Box freq,
             int mehta_level = 1) {
    auto cls = detail::root_classes(rs, k);
    if (!detail::pairwise_orthogonal(cls))
      throw std::invalid_argument("TensorPlan: positive roots are not pairwise orthogonal");
    // axis frame: root directions first, then a Gram-Schmidt completion
    std::vector<Eigen::VectorXd> frame;
    for (const auto& rc : cls) frame.push_back(rc.dir);
    for (int i = 0; i < rs.ambient_dim && static_cast<int>(frame.size()) < rs.ambient_dim; ++i) {
      Eigen::VectorXd v = Eigen::VectorXd::Unit(rs.ambient_dim, i);
      for (const auto& u : frame) v -= u.dot(v) * u;
      if (v.norm() > 1e-8) frame.push_back(v.normalized());
    }
    for (size_t ax = 0; ax < frame.size(); ++ax) {
      Axis a;
      a.direction = frame[ax];
      if (ax < cls.size()) {
        a.k = cls[ax].exponent / 2;
        a.root_length = cls[ax].length;
      }
      a.kernel = Rank1Kernel(a.k);
      bool integer_exp = std::abs(2 * a.k - std::round(2 * a.k)) < 1e-12;
      auto make_rule = [&](const Box& b) {
        std::vector<double> breaks =
            integer_exp ? uniform_breaks(-b.half, b.half, b.panels)
                        : symmetric_graded_breaks(b.half, b.panels);
        return composite_legendre(breaks, b.nodes_per_panel);
      };
      auto weigh = [&](const Rule1D& rule, std::vector<double>& nodes,
                       std::vector<double>& weights) {
        nodes = rule.nodes;
        weights.resize(rule.nodes.size());
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
          double om = a.k == 0 ? 1.0 : std::pow(a.root_length * std::abs(rule.nodes[i]), 2 * a.k);
          weights[i] = rule.weights[i] * om;
        }
      };
      weigh(make_rule(space), a.nodes, a.weights);
      weigh(make_rule(freq), a.fnodes, a.fweights);
      const Eigen::Index rows = static_cast<Eigen::Index>(a.fnodes.size());
      const Eigen::Index cols = static_cast<Eigen::Index>(a.nodes.size());
      a.kmat.resize(rows, cols);
      for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
          a.kmat(r, c) = a.kernel(Complex(0, -a.fnodes[r] * a.nodes[c]));
      a.ck = (a.k == 0 ? 1.0 : std::pow(a.root_length, 2 * a.k)) *
             detail::radial_gauss_moment(2 * a.k, mehta_level);
      axes_.push_back(std::move(a));
    }
    ck_ = 1;
    for (const auto& a : axes_) ck_ *= a.ck;
    space_dims_.clear();
    freq_dims_.clear();
    for (const auto& a : axes_) {
      space_dims_.push_back(static_cast<int>(a.nodes.size()));
      freq_dims_.push_back(static_cast<int>(a.fnodes.size()));
    }
    build_grid(rs, k, /*freq=*/false, grid_);
    build_grid(rs, k, /*freq=*/true, fgrid_);
    grid_.spacing = 2 * space.half / space.panels;
    fgrid_.spacing = 2 * freq.half / freq.panels;
  }

  const Grid& grid() const { return grid_; }
  const Grid& freq_grid() const { return fgrid_; }
  const std::vector<Axis>& axes() const { return axes_; }
  double mehta() const { return ck_; }

  /// Spatial grid function -> frequency grid function.
  Eigen::VectorXcd forward(const Eigen::VectorXcd& f) const { return apply(f, false); }
  /// Frequency grid function -> spatial grid function.
  Eigen::VectorXcd inverse(const Eigen::VectorXcd& g) const { return apply(g, true); }

  /// E(i x, xi_a) on the frequency grid, as prod_ax conj(E_ax(-i xi x_ax)).
  Eigen::VectorXcd translation_multiplier(const Eigen::VectorXd& x) const {
    std::vector<Eigen::VectorXcd> per_axis;
    for (const auto& a : axes_) {
      double xa = a.direction.dot(x);
      Eigen::VectorXcd m(static_cast<Eigen::Index>(a.fnodes.size()));
      for (size_t i = 0; i < a.fnodes.size(); ++i)
        m(static_cast<Eigen::Index>(i)) = std::conj(a.kernel(Complex(0, -a.fnodes[i] * xa)));
      per_axis.push_back(std::move(m));
    }
    Eigen::VectorXcd out(static_cast<Eigen::Index>(fgrid_.size()));
    std::vector<int> idx(axes_.size(), 0);
    for (size_t f = 0; f < fgrid_.size(); ++f) {
      Complex v = 1.0;
      for (size_t ax = 0; ax < axes_.size(); ++ax) v *= per_axis[ax](idx[ax]);
      out(static_cast<Eigen::Index>(f)) = v;
      for (int ax = static_cast<int>(axes_.size()) - 1; ax >= 0; --ax) {
        if (++idx[ax] < freq_dims_[ax]) break;
        idx[ax] = 0;
      }
    }
    return out;
  }

  Eigen::VectorXcd translate(const Eigen::VectorXd& x, const Eigen::VectorXcd& f) const {
    return inverse(translation_multiplier(x).cwiseProduct(forward(f)));
  }

  /// F^{-1} g at an arbitrary point, for g on the frequency grid.
  Complex inverse_at(const Eigen::VectorXcd& g, const Eigen::VectorXd& y) const {
    Eigen::VectorXcd m = translation_multiplier(y);  // E(i y, xi_a)
    std::vector<Complex> t(fgrid_.size());
    for (size_t i = 0; i < fgrid_.size(); ++i)
      t[i] = m(static_cast<Eigen::Index>(i)) * g(static_cast<Eigen::Index>(i)) * fgrid_.weights[i];
    return pairwise_sum(t) / ck_;
  }

  Complex translate_at(const Eigen::VectorXd& x, const Eigen::VectorXcd& f,
                       const Eigen::VectorXd& y) const {
    return inverse_at(translation_multiplier(x).cwiseProduct(forward(f)), y);
  }

  /// Plain (delta-unital) Dunkl convolution; F(f * g) = c_k Ff . Fg.
  Eigen::VectorXcd convolve(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) const {
    return inverse(ck_ * forward(f).cwiseProduct(forward(g)));
  }

  double l2(const Eigen::VectorXcd& f) const { return l2_norm(grid_, f); }
  double freq_l2(const Eigen::VectorXcd& g) const { return l2_norm(fgrid_, g); }

 private:
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  void build_grid(const RootSystem& rs, const Multiplicity& k, bool freq, Grid& g) const {
    size_t total = 1;
    for (const auto& a : axes_) total *= freq ? a.fnodes.size() : a.nodes.size();
    g.nodes.resize(total);
    g.lebesgue.assign(total, 1.0);
    g.weights.assign(total, 1.0);
    g.omega.assign(total, 1.0);
    std::vector<int> idx(axes_.size(), 0);
    const auto& dims = freq ? freq_dims_ : space_dims_;
    for (size_t f = 0; f < total; ++f) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(rs.ambient_dim);
      double w = 1;
      for (size_t ax = 0; ax < axes_.size(); ++ax) {
        const Axis& a = axes_[ax];
        x += (freq ? a.fnodes[idx[ax]] : a.nodes[idx[ax]]) * a.direction;
        w *= freq ? a.fweights[idx[ax]] : a.weights[idx[ax]];
      }
      g.nodes[f] = x;
      g.weights[f] = w;
      g.omega[f] = weight_omega(rs, k, x);
      g.lebesgue[f] = g.omega[f] > 0 ? w / g.omega[f] : 0.0;
      for (int ax = static_cast<int>(axes_.size()) - 1; ax >= 0; --ax) {
        if (++idx[ax] < dims[ax]) break;
        idx[ax] = 0;
      }
    }
  }

  // Contract axis by axis (last axis fastest in the flattening). While axis
  // `ax` is processed, earlier axes already carry output sizes and later ones
  // still carry input sizes, so each step reshapes to outer x m_in x inner.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& f, bool adjoint) const {
    const auto& in_dims = adjoint ? freq_dims_ : space_dims_;
    const auto& out_dims = adjoint ? space_dims_ : freq_dims_;
    Eigen::VectorXcd v = f;
    size_t inner = 1;
    for (size_t ax = 1; ax < axes_.size(); ++ax) inner *= in_dims[ax];
    size_t outer = 1;
    for (size_t ax = 0; ax < axes_.size(); ++ax) {
      const Axis& a = axes_[ax];
      const size_t m_in = in_dims[ax];
      const size_t m_out = out_dims[ax];
      Eigen::VectorXcd w(static_cast<Eigen::Index>(m_in));
      const auto& wsrc = adjoint ? a.fweights : a.weights;
      for (size_t i = 0; i < m_in; ++i) w(static_cast<Eigen::Index>(i)) = wsrc[i] / a.ck;
      Eigen::MatrixXcd op = (adjoint ? Eigen::MatrixXcd(a.kmat.adjoint()) : a.kmat) *
                            w.asDiagonal();
      Eigen::VectorXcd next(static_cast<Eigen::Index>(outer * m_out * inner));
      for (size_t o = 0; o < outer; ++o) {
        Eigen::Map<const RowMat> src(v.data() + o * m_in * inner,
                                     static_cast<Eigen::Index>(m_in),
                                     static_cast<Eigen::Index>(inner));
        Eigen::Map<RowMat> dst(next.data() + o * m_out * inner,
                               static_cast<Eigen::Index>(m_out),
                               static_cast<Eigen::Index>(inner));
        dst = op * src;
      }
      v = std::move(next);
      outer *= m_out;
      if (ax + 1 < axes_.size()) inner /= in_dims[ax + 1];
    }
    return v;
  }

  std::vector<Axis> axes_;
  std::vector<int> space_dims_;
  std::vector<int> freq_dims_;
  Grid grid_;
  Grid fgrid_;
  double ck_ = 1;
};

}  // namespace dunkl
