#include <catch2/catch_amalgamated.hpp>

#include "dunkl/intertwiner.hpp"

using namespace dunkl;

TEST_CASE("rank-one coefficients follow the step recursion") {
  // V x^n = c_n x^n with c_n = c_{n-1} * n / (n + 2k [n odd]); V 1 = 1
  auto rs = RootSystem::rank1();
  Rational kv(1, 2);
  Multiplicity k = Multiplicity::uniform(rs, kv);
  GradedLinearMap v = build_intertwiner(rs, k, 8);
  Rational c(1);
  for (int n = 1; n <= 8; ++n) {
    c = c * Rational(n) / (Rational(n) + (n % 2 == 1 ? 2 * kv : Rational(0)));
    Poly vx = v.apply(Poly::monomial(1, Monomial{n}, 1));
    CHECK(vx.coeff(Monomial{n}) == c);
    CHECK(vx.terms().size() == 1);
  }
}

TEST_CASE("defining relations hold exactly") {
  for (const char* name : {"rank1", "A(1)", "A(2)"}) {
    auto rs = make_root_system(name);
    for (Rational kv : {Rational(1, 2), Rational(1)}) {
      Multiplicity k = Multiplicity::uniform(rs, kv);
      const int nmax = 6;
      GradedLinearMap v = build_intertwiner(rs, k, nmax);
      const int d = rs.ambient_dim;
      // V 1 = 1
      CHECK((v.apply(Poly::constant(d, 1)) - Poly::constant(d, 1)).is_zero());
      // T_xi V = V d_xi on every monomial, degree preserved
      for (int n = 1; n <= nmax; ++n) {
        for (const auto& m : monomial_basis(d, n)) {
          Poly p = Poly::monomial(d, m, 1);
          Poly vp = v.apply(p);
          CHECK(vp.degree() == n);
          CHECK((vp - vp.homogeneous_part(n)).is_zero());
          for (int i = 0; i < d; ++i) {
            RatVec xi(d, Rational(0));
            xi[i] = 1;
            CHECK((dunkl_T(rs, k, xi, vp) - v.apply(p.derivative(i))).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("inverse undoes the map degree by degree") {
  auto rs = make_root_system("A(1)");
  Multiplicity k = Multiplicity::uniform(rs, Rational(1));
  GradedLinearMap v = build_intertwiner(rs, k, 5);
  GradedLinearMap vi = v.inverse();
  for (int n = 0; n <= 5; ++n)
    for (const auto& m : monomial_basis(2, n)) {
      Poly p = Poly::monomial(2, m, 1);
      CHECK((vi.apply(v.apply(p)) - p).is_zero());
    }
}
