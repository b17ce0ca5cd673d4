#include <catch2/catch_amalgamated.hpp>

#include "dunkl/poly.hpp"

using namespace dunkl;

TEST_CASE("arithmetic and degree bookkeeping") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  Poly p = (x + y) * (x - y);
  CHECK((p - (x * x - y * y)).is_zero());
  CHECK(p.degree() == 2);
  CHECK(Poly::constant(2, 5).degree() == 0);
  CHECK(Poly(2).degree() == -1);
  CHECK((p * Poly(2)).is_zero());
}

TEST_CASE("derivatives") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  Poly p = x * x * y + Poly::constant(2, 3) * y;
  CHECK((p.derivative(0) - Rational(2) * x * y).is_zero());
  CHECK((p.derivative(1) - (x * x + Poly::constant(2, 3))).is_zero());
  RatVec xi{Rational(1), Rational(2)};
  CHECK((p.derivative(xi) - (p.derivative(0) + Rational(2) * p.derivative(1))).is_zero());
}

TEST_CASE("homogeneous decomposition sums back") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  Poly p = x * x * y - y + Poly::constant(2, 7);
  Poly sum(2);
  for (int n = 0; n <= p.degree(); ++n) sum += p.homogeneous_part(n);
  CHECK((sum - p).is_zero());
  CHECK(p.homogeneous_part(3).degree() == 3);
}

TEST_CASE("linear substitution composes") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  Poly p = x * y;
  // rotate by the reflection swapping coordinates
  RatMat swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK((p.substitute_linear(swap) - p).is_zero());
  Poly q = x * x;
  CHECK((q.substitute_linear(swap) - y * y).is_zero());
}

TEST_CASE("evaluation, exact and floating") {
  Poly p = Poly::norm_squared(3);
  RatVec v{Rational(1), Rational(2), Rational(3)};
  CHECK(p.eval(v) == Rational(14));
  std::vector<double> w{1.0, 2.0, 3.0};
  CHECK(p.eval_at(w) == Catch::Approx(14.0));
}

TEST_CASE("spectral substitution x -> i x") {
  // p(x) = 1 - x^2 evaluated at i xi gives 1 + xi^2
  Poly p = Poly::constant(1, 1) - Poly::norm_squared(1);
  std::vector<double> xi{2.0};
  auto v = p.eval_i(xi);
  CHECK(v.real() == Catch::Approx(5.0));
  CHECK(v.imag() == Catch::Approx(0.0).margin(1e-15));
  // odd degrees pick up the factor i
  Poly lin = Poly::variable(1, 0);
  auto w = lin.eval_i(xi);
  CHECK(w.real() == Catch::Approx(0.0).margin(1e-15));
  CHECK(w.imag() == Catch::Approx(2.0));
  // eval_minus_i is the conjugate on real-coefficient input
  auto c = lin.eval_minus_i(xi);
  CHECK(c.imag() == Catch::Approx(-2.0));
}

TEST_CASE("exact division by a vanishing linear form") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  Poly diff = x * x * x - y * y * y;
  RatVec a{Rational(1), Rational(-1)};  // <a, .> = x - y
  Poly q = diff.divide_by_linear(a);
  CHECK((q * (x - y) - diff).is_zero());
  // non-divisible input is an internal error
  CHECK_THROWS_AS((x * x + y).divide_by_linear(a), internal_error);
}

TEST_CASE("monomial basis sizes") {
  CHECK(monomial_basis(1, 5).size() == 1);
  CHECK(monomial_basis(2, 5).size() == 6);
  CHECK(monomial_basis(3, 4).size() == 15);  // C(6,2)
}
