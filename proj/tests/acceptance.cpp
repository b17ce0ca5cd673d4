// Acceptance gate: one self-contained criterion per line, pinned parameters
// and tolerances, exit 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dunkl/suites.hpp"

using namespace dunkl;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double measured, double tolerance,
               double seconds) {
  bool pass = std::isfinite(measured) && measured <= tolerance;
  if (!pass) ++g_failures;
  std::printf("[%s] %02d %-34s measured %.3e  tolerance %.1e  (%.1fs)\n",
              pass ? "PASS" : "FAIL", number, name.c_str(), measured, tolerance, seconds);
  std::fflush(stdout);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

const RatVec kFullKSet{Rational(0), Rational(1, 2), Rational(1), Rational(2)};

}  // namespace

int main() {
  // 1. The deformed directional derivatives commute, exactly, on random
  //    polynomials of degree <= 8.
  {
    Timer t;
    std::mt19937_64 rng(20240817);
    int bad = 0;
    for (const auto& [name, rs] : detail::standard_systems()) {
      (void)name;
      for (const Rational& kv : kFullKSet) {
        Multiplicity k = Multiplicity::uniform(rs, kv);
        for (int trial = 0; trial < 50; ++trial) {
          Poly q = detail::random_poly(rng, rs.ambient_dim, 8);
          RatVec xi = detail::random_direction(rng, rs.ambient_dim);
          RatVec eta = detail::random_direction(rng, rs.ambient_dim);
          Poly lhs = dunkl_T(rs, k, xi, dunkl_T(rs, k, eta, q));
          Poly rhs = dunkl_T(rs, k, eta, dunkl_T(rs, k, xi, q));
          if (!(lhs - rhs).is_zero()) ++bad;
        }
      }
    }
    criterion(1, "exact commutation", bad, 0.0, t.seconds());
  }

  // 2. The intertwiner fixes constants, exchanges the deformed and plain
  //    derivatives, and preserves the degree, exactly up to degree 10.
  {
    Timer t;
    int bad = 0;
    for (const auto& [name, rs] : detail::standard_systems()) {
      (void)name;
      const int dim = rs.ambient_dim;
      for (const Rational& kv : kFullKSet) {
        Multiplicity k = Multiplicity::uniform(rs, kv);
        GradedLinearMap v = build_intertwiner(rs, k, 10);
        if (!(v.apply(Poly::constant(dim, 1)) - Poly::constant(dim, 1)).is_zero()) ++bad;
        int which = 0;
        for (int n = 1; n <= 10; ++n) {
          for (const Monomial& m : monomial_basis(dim, n)) {
            Poly p = Poly::monomial(dim, m, 1);
            Poly vp = v.apply(p);
            if (!vp.is_zero() && !(vp - vp.homogeneous_part(n)).is_zero()) ++bad;
            RatVec xi(dim, Rational(0));
            xi[which++ % dim] = 1;
            if (!(dunkl_T(rs, k, xi, vp) - v.apply(p.derivative(xi))).is_zero()) ++bad;
          }
        }
      }
    }
    criterion(2, "intertwiner identities", bad, 0.0, t.seconds());
  }

  // 3. Rank-1 kernel series against the closed form e(1 + e^{-2})/2 at
  //    lambda = x = 1, k = 1, with certified truncation tails.
  {
    Timer t;
    auto rs = RootSystem::rank1();
    Multiplicity k = Multiplicity::uniform(rs, 1);
    SeriesKernel sk(build_intertwiner(rs, k, 30));
    Eigen::VectorXcd lam(1);
    lam << Complex(1.0, 0.0);
    Eigen::VectorXd x(1);
    x << 1.0;
    const double oracle = std::exp(1.0) * (1.0 + std::exp(-2.0)) / 2.0;
    double worst = 0;  // excess of the error over the tail bound, plus N=30 abs error
    for (int n : {5, 10, 20, 30}) {
      KernelValue v = kernel_series(sk, lam, x, n);
      double err = std::abs(v.value - Complex(oracle, 0.0));
      worst = std::max(worst, err - v.tail_bound);
      if (n == 30) worst = std::max(worst, err - 1e-10);
    }
    criterion(3, "kernel truncation bounds", std::max(worst, 0.0), 0.0, t.seconds());
  }

  // 4. Normalization constant: adaptive quadrature vs the gamma-function
  //    closed form.
  {
    Timer t;
    double worst = 0;
    for (const auto& [name, rs] : detail::standard_systems()) {
      (void)name;
      for (const Rational& kv : RatVec{Rational(0), Rational(1, 2), Rational(1)}) {
        Multiplicity k = Multiplicity::uniform(rs, kv);
        double numeric = mehta_constant(rs, k, 1);
        double oracle = mehta_closed_form(rs, k);
        worst = std::max(worst, std::abs(numeric - oracle) / oracle);
      }
    }
    criterion(4, "normalization constant", worst, 1e-6, t.seconds());
  }

  // 5. Plancherel identity on 10 polynomial-times-Gaussian functions.
  {
    Timer t;
    std::mt19937_64 rng(411);
    double worst = 0;
    for (const char* name : {"rank1", "A(1)"}) {
      RootSystem rs = std::string(name) == "rank1" ? RootSystem::rank1() : make_root_system(name);
      for (const Rational& kv : RatVec{Rational(0), Rational(1)}) {
        Multiplicity k = Multiplicity::uniform(rs, kv);
        TensorPlan plan(rs, k, 12.0, 36, 8);
        for (int i = 0; i < 10; ++i) {
          PolyGaussian f = detail::random_gaussian_type(rng, rs.ambient_dim);
          auto fg = sample(plan.grid(), [&](const Eigen::VectorXd& y) { return f.eval(y); });
          double a = plan.l2(fg);
          worst = std::max(worst, std::abs(plan.freq_l2(plan.forward(fg)) - a) / a);
        }
      }
    }
    criterion(5, "Plancherel identity", worst, 1e-3, t.seconds());
  }

  // 6. Translation of a unit-ball bump by x = 2 stays supported in the pair
  //    of reflected balls, up to one grid spacing.
  {
    Timer t;
    auto rs = RootSystem::rank1();
    Multiplicity k = Multiplicity::uniform(rs, 1);
    TensorPlan plan(rs, k, TensorPlan::Box{6.0, 120, 10}, TensorPlan::Box{120.0, 240, 10});
    const Grid& g = plan.grid();
    auto f = sample(g, detail::poly_bump(Eigen::VectorXd::Zero(1), 1.0));
    Eigen::VectorXd x(1);
    x << 2.0;
    auto tf = plan.translate(x, f);
    auto r = verify_translation_support(g, tf, weyl_elements(rs), x, 1.0, g.spacing, 1e-4);
    criterion(6, "translation support", r.outside_mass_ratio, 1e-4, t.seconds());
  }

  // 7. Convolution support: reflected-ball bound and convex-hull bound.
  {
    Timer t;
    auto rs = make_root_system("A(1)");
    Multiplicity k = Multiplicity::uniform(rs, 1);
    TensorPlan plan(rs, k, TensorPlan::Box{6.0, 60, 10}, TensorPlan::Box{36.0, 90, 10});
    const Grid& g = plan.grid();
    Eigen::VectorXd c(2);
    c << 1.5, 0.5;
    auto f = sample(g, detail::poly_bump(Eigen::VectorXd::Zero(2), 1.0));
    auto h = sample(g, detail::poly_bump(c, 0.5));
    auto conv = plan.convolve(f, h);
    auto w = weyl_elements(rs);
    auto rb = verify_convolution_support(g, conv, w, c, 0.5, 1.0, g.spacing, 1e-4);
    auto rh = verify_convolution_support_hull(g, conv, w, Eigen::VectorXd::Zero(2), 1.0, c, 0.5,
                                              g.spacing, 1e-4);
    criterion(7, "convolution support", std::max(rb.outside_mass_ratio, rh.outside_mass_ratio),
              1e-4, t.seconds());
  }

  // 8. Parametrix identity for 1 - Delta on a Gaussian, including the forced
  //    blending variant whose remainder must have a finite H^8 norm.
  {
    Timer t;
    auto rs = RootSystem::rank1();
    Multiplicity k = Multiplicity::uniform(rs, 1);
    TensorPlan plan(rs, k, 12.0, 36, 10);
    Poly p = Poly::constant(1, 1) - Poly::norm_squared(1);  // symbol 1 + |xi|^2
    auto sym = certify_elliptic(p);
    PolyGaussian phi = PolyGaussian::gaussian(1);
    PolyGaussian pt_phi = apply_poly_op(rs, k, p, phi);
    auto phi_g = sample(plan.grid(), [&](const Eigen::VectorXd& y) { return phi.eval(y); });
    auto pt_g = sample(plan.grid(), [&](const Eigen::VectorXd& y) { return pt_phi.eval(y); });
    double worst = 0;
    double h8 = 0;
    for (double r_out : {0.0, 2.0}) {
      ReciprocalSymbol rec = reciprocal_symbol(*sym);
      rec.r_out = r_out;
      Parametrix pr = build_parametrix(rec, plan);
      auto lhs = parametrix_convolve(pr, plan, pt_g) + remainder_convolve(pr, plan, phi_g);
      worst = std::max(worst, (lhs - phi_g).cwiseAbs().maxCoeff());
      if (r_out > 0) {
        const Grid& fg = plan.freq_grid();
        std::vector<double> terms(fg.size());
        for (size_t i = 0; i < fg.size(); ++i)
          terms[i] = std::pow(1.0 + fg.nodes[i].squaredNorm(), 8.0) *
                     std::norm(pr.remainder_hat(static_cast<Eigen::Index>(i))) * fg.weights[i];
        h8 = std::sqrt(pairwise_sum(terms));
      }
    }
    if (!std::isfinite(h8)) worst = h8;  // finiteness of the remainder norm
    criterion(8, "parametrix identity", worst, 1e-3, t.seconds());
  }

  // 9. Elliptic regularity: the solution gains two orders with constant 1 on
  //    the spectral side, and solves the equation to a small residual.
  {
    Timer t;
    auto rs = RootSystem::rank1();
    Multiplicity k = Multiplicity::uniform(rs, 1);
    TensorPlan plan(rs, k, 12.0, 36, 10);
    auto sym = certify_elliptic(Poly::constant(1, 1) - Poly::norm_squared(1));
    auto f = sample(plan.grid(), [](const Eigen::VectorXd& y) {
      return (1.0 + 0.5 * y(0) * y(0)) * std::exp(-0.5 * y.squaredNorm());
    });
    double worst = 0;
    for (double s : {0.0, 1.0, 2.0}) {
      RegularityReport r = regularity_experiment(*sym, plan, f, s);
      worst = std::max({worst, r.ratio - 1.0, r.residual});
    }
    criterion(9, "elliptic regularity", worst, 1e-3, t.seconds());
  }

  // 10. Distribution family on the symmetric cone: classical identities at
  //     n = 1 and deformed identities at n = 2.
  {
    Timer t;
    // (a) classical composition and the order-zero point mass
    double worst_classical = 0;
    {
      RieszContext ctx(1, Rational(0));
      PolyGaussian phi = PolyGaussian::gaussian(1);
      for (double x : {0.5, 1.0, 2.0}) {
        Complex lhs = halfline_convolution_density(1.0, 1.0, x);
        Complex rhs = x / cgamma(Complex(2.0, 0.0));
        worst_classical = std::max(worst_classical, std::abs(lhs - rhs) / std::abs(rhs));
      }
      Complex p0 = ctx.pair(Complex(0.0, 0.0), phi);
      double phi0 = phi.eval(Eigen::VectorXd::Zero(1));
      worst_classical = std::max(worst_classical, std::abs(p0 - Complex(phi0, 0.0)) / phi0);
    }
    criterion(10, "riesz classical n=1", worst_classical, 1e-6, t.seconds());

    // (b) Laplace transform is the reciprocal power of the product
    Timer tb;
    std::mt19937_64 rng(1031);
    auto zsamples = [&rng]() {
      std::vector<Eigen::VectorXcd> out;
      for (int i = 0; i < 10; ++i) {
        Eigen::VectorXcd z(2);
        for (int d = 0; d < 2; ++d)
          z(d) = Complex(1.0 + 2.0 * (rng() % 1000) / 1000.0,
                         -1.0 + 2.0 * (rng() % 1000) / 1000.0);
        out.push_back(z);
      }
      return out;
    };
    double worst_laplace = 0, worst_conv = 0, worst_ladder = 0;
    for (const Rational& kv : RatVec{Rational(1, 2), Rational(1)}) {
      RieszContext ctx(2, kv);
      Complex mu(ctx.mu0() + 1.0, 0.4);
      auto zs = zsamples();
      for (const auto& z : zs) {
        Complex lhs = ctx.laplace(mu, z);
        Complex rhs = delta_power(z, -mu);
        worst_laplace = std::max(worst_laplace, std::abs(lhs - rhs) / std::abs(rhs));
      }
      // (c) convolution identity through the Laplace characterization
      Complex nu(ctx.mu0() + 1.2, -0.3);
      for (const auto& c : convolution_identity_check(ctx, mu, nu, Eigen::VectorXd::Zero(2), zs))
        worst_conv = std::max(worst_conv, c.rel_err);
      // (d) raising and lowering ladder
      PolyGaussian phi2 = PolyGaussian::gaussian(2);
      worst_ladder = std::max(worst_ladder,
                              raising_check(ctx, Complex(ctx.mu0() + 1.3, 0.0), phi2).rel_err);
      Complex shallow = ctx.pair(mu, phi2);
      Complex deep = ctx.pair(mu, phi2, ctx.lowering_depth(mu) + 1);
      worst_ladder = std::max(worst_ladder, std::abs(shallow - deep) / std::abs(shallow));
    }
    criterion(10, "riesz laplace n=2", worst_laplace, 1e-3, tb.seconds());

    // (c) direct convolution route at n = 1, fractional orders
    Timer tc;
    double worst_direct = 0;
    for (double x : {0.5, 1.5}) {
      Complex lhs = halfline_convolution_density(1.2, 1.5, x);
      Complex rhs = std::pow(x, 1.7) / cgamma(Complex(2.7, 0.0));
      worst_direct = std::max(worst_direct, std::abs(lhs - rhs) / std::abs(rhs));
    }
    criterion(10, "riesz convolution", worst_conv, 1e-3, tc.seconds());
    criterion(10, "riesz direct n=1", worst_direct, 1e-4, 0.0);

    Timer td;
    {
      RieszContext ctx1(1, Rational(0));
      worst_ladder = std::max(worst_ladder,
                              raising_check(ctx1, Complex(1.4, 0.0),
                                            PolyGaussian::gaussian(1)).rel_err);
    }
    criterion(10, "riesz ladder", worst_ladder, 1e-6, td.seconds());
  }

  // 11. At k = 0 the whole calculus reduces to the classical one.
  {
    Timer t;
    double worst = 0;
    // derivative reduction, exactly
    std::mt19937_64 rng(77);
    for (const auto& [name, rs] : detail::standard_systems()) {
      (void)name;
      Multiplicity k0 = Multiplicity::uniform(rs, 0);
      for (int trial = 0; trial < 5; ++trial) {
        Poly p = detail::random_poly(rng, rs.ambient_dim, 6);
        RatVec xi = detail::random_direction(rng, rs.ambient_dim);
        if (!(dunkl_T(rs, k0, xi, p) - p.derivative(xi)).is_zero()) worst = 1.0;
      }
    }
    // kernel reduces to the exponential
    {
      auto rs = RootSystem::rank1();
      Multiplicity k0 = Multiplicity::uniform(rs, 0);
      SeriesKernel sk(build_intertwiner(rs, k0, 40));
      Eigen::VectorXcd lam(1);
      lam << Complex(1.0, 0.0);
      Eigen::VectorXd x(1);
      x << 1.0;
      worst = std::max(worst, std::abs(kernel_series(sk, lam, x, 40).value - std::exp(1.0)));
    }
    // transform is the classical Fourier transform (Gaussian self-dual) and
    // translation is the ordinary shift
    {
      auto rs = RootSystem::rank1();
      Multiplicity k0 = Multiplicity::uniform(rs, 0);
      TensorPlan plan(rs, k0, TensorPlan::Box{6.0, 120, 10}, TensorPlan::Box{120.0, 240, 10});
      const Grid& g = plan.grid();
      auto bump = detail::poly_bump(Eigen::VectorXd::Zero(1), 1.0);
      auto f = sample(g, bump);
      Eigen::VectorXd x(1);
      x << 2.0;
      auto tf = plan.translate(x, f);
      for (size_t i = 0; i < g.size(); ++i)
        worst = std::max(worst, std::abs(tf(static_cast<Eigen::Index>(i)) -
                                         Complex(bump(g.nodes[i] + x), 0.0)));
      TensorPlan gp(rs, k0, 12.0, 36, 8);
      auto gauss = sample(gp.grid(),
                          [](const Eigen::VectorXd& y) { return std::exp(-0.5 * y.squaredNorm()); });
      worst = std::max(worst, (gp.forward(gauss) - gauss).cwiseAbs().maxCoeff());
    }
    criterion(11, "classical reduction at k=0", worst, 1e-6, t.seconds());
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
