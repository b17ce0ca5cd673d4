#include <catch2/catch_amalgamated.hpp>

#include "dunkl/riesz.hpp"

using namespace dunkl;

TEST_CASE("complex gamma against known values") {
  CHECK(cgamma(Complex(5.0, 0.0)).real() == Catch::Approx(24.0).epsilon(1e-12));
  CHECK(cgamma(Complex(0.5, 0.0)).real() == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-12));
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  Complex z(0.3, 0.7);
  Complex lhs = cgamma(z) * cgamma(1.0 - z);
  Complex rhs = M_PI / std::sin(M_PI * z);
  CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);
}

TEST_CASE("graded gamma factor reduces and detects poles") {
  // n = 1: Gamma_1(mu) = Gamma(mu)
  CHECK(std::abs(gamma_n(Complex(1.7, 0.3), 1, 0.0) - cgamma(Complex(1.7, 0.3))) < 1e-12);
  // pole locations mu = k (j-1) - N
  CHECK(gamma_n_pole(Complex(0.0, 0.0), 1, 0.0));
  CHECK(gamma_n_pole(Complex(0.5, 0.0), 2, 0.5));   // j = 2: mu - k = 0
  CHECK_FALSE(gamma_n_pole(Complex(0.7, 0.0), 2, 0.5));
  CHECK_FALSE(gamma_n_pole(Complex(0.5, 0.3), 2, 0.5));
}

TEST_CASE("positivity parameter set") {
  // {0, k, ..., k(n-1)} together with the ray (k(n-1), inf)
  CHECK(wallach_contains(Rational(0), 3, Rational(1, 2)));
  CHECK(wallach_contains(Rational(1, 2), 3, Rational(1, 2)));
  CHECK(wallach_contains(Rational(1), 3, Rational(1, 2)));
  CHECK(wallach_contains(Rational(3, 2), 3, Rational(1, 2)));
  CHECK_FALSE(wallach_contains(Rational(7, 10), 3, Rational(1, 2)));
  CHECK(wallach_contains(Rational(5), 2, Rational(1)));
}

TEST_CASE("density closed form") {
  // n = 2, k = 1, mu = 3: density = x1 x2 |x1 - x2|^2 ... with mu0 = 1 the
  // power (mu - mu0 - 1) = 1, omega = |x1-x2|^2, Gamma_2(3) = 2! Gamma(3-1)...
  RieszContext ctx(2, Rational(1));
  Eigen::VectorXd x(2);
  x << 1.0, 2.0;
  Complex d = ctx.density(Complex(3.0, 0.0), x);
  Complex expect = Complex(1.0 * 2.0, 0.0) * 1.0 / gamma_n(Complex(3.0, 0.0), 2, 1.0);
  CHECK(std::abs(d - expect) / std::abs(expect) < 1e-12);
}

TEST_CASE("pairing is stable in the lowering depth") {
  RieszContext ctx(2, Rational(1, 2));
  PolyGaussian phi = PolyGaussian::gaussian(2);
  Complex mu(ctx.mu0() + 0.9, 0.2);
  Complex base = ctx.pair(mu, phi);
  Complex deeper = ctx.pair(mu, phi, ctx.lowering_depth(mu) + 1);
  CHECK(std::abs(base - deeper) / std::abs(base) < 1e-6);
}

TEST_CASE("positive parameters give positive pairings against positive test functions") {
  RieszContext ctx(2, Rational(1));
  PolyGaussian phi = PolyGaussian::gaussian(2);
  Complex p = ctx.pair(Complex(2.5, 0.0), phi);
  CHECK(p.real() > 0);
  CHECK(std::abs(p.imag()) < 1e-10 * p.real());
}

TEST_CASE("Laplace transform is the reciprocal power") {
  for (Rational kv : {Rational(1, 2), Rational(1)}) {
    RieszContext ctx(2, kv);
    Complex mu(ctx.mu0() + 1.0, 0.3);
    Eigen::VectorXcd z(2);
    z << Complex(1.5, 0.5), Complex(2.0, -0.3);
    Complex lhs = ctx.laplace(mu, z);
    Complex rhs = delta_power(z, -mu);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-6);
  }
}

TEST_CASE("shifted Laplace transform factors the exponential") {
  RieszContext ctx(1, Rational(0));
  Complex mu(1.3, 0.0);
  Eigen::VectorXd s(1);
  s << 0.7;
  Eigen::VectorXcd z(1);
  z << Complex(1.1, 0.2);
  Complex lhs = ctx.laplace_shifted(mu, s, z);
  Complex rhs = ctx.laplace(mu, Eigen::VectorXcd(z.array() + Complex(0.7, 0.0)));
  CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-10);
}

TEST_CASE("half-line family composes under convolution") {
  double worst = 0;
  for (double x : {0.5, 1.0, 2.0}) {
    Complex lhs = halfline_convolution_density(1.0, 1.0, x);
    Complex rhs = x / cgamma(Complex(2.0, 0.0));
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("order zero acts as the point evaluation") {
  RieszContext ctx(1, Rational(0));
  PolyGaussian phi = PolyGaussian::gaussian(1);
  Complex p0 = ctx.pair(Complex(0.0, 0.0), phi);
  CHECK(std::abs(p0 - Complex(1.0, 0.0)) < 1e-8);  // phi(0) = 1
}

TEST_CASE("raising identity") {
  RieszContext ctx1(1, Rational(0));
  RaisingReport r1 = raising_check(ctx1, Complex(1.4, 0.0), PolyGaussian::gaussian(1));
  CHECK(r1.rel_err < 1e-8);
  RieszContext ctx2(2, Rational(1));
  RaisingReport r2 = raising_check(ctx2, Complex(2.3, 0.0), PolyGaussian::gaussian(2));
  CHECK(r2.rel_err < 1e-6);
}

TEST_CASE("convolution identity through the Laplace characterization") {
  RieszContext ctx(2, Rational(1, 2));
  Complex mu(ctx.mu0() + 1.0, 0.4), nu(ctx.mu0() + 1.2, -0.3);
  std::vector<Eigen::VectorXcd> zs;
  Eigen::VectorXcd z(2);
  z << Complex(1.2, 0.3), Complex(1.8, -0.4);
  zs.push_back(z);
  z << Complex(2.5, 0.0), Complex(1.0, 0.8);
  zs.push_back(z);
  auto checks = convolution_identity_check(ctx, mu, nu, Eigen::VectorXd::Zero(2), zs);
  for (const auto& c : checks) CHECK(c.rel_err < 1e-3);
}
