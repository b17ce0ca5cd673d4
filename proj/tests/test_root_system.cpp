#include <catch2/catch_amalgamated.hpp>

#include "dunkl/root_system.hpp"

using namespace dunkl;

TEST_CASE("construction and orbit counts") {
  auto r1 = RootSystem::rank1();
  CHECK(r1.ambient_dim == 1);
  CHECK(r1.roots.size() == 2);
  CHECK(r1.num_orbits == 1);

  auto a2 = make_root_system("A(2)");
  CHECK(a2.ambient_dim == 3);
  CHECK(a2.roots.size() == 6);
  CHECK(a2.num_orbits == 1);
  CHECK(a2.positive_roots.size() == 3);

  CHECK_THROWS_AS(make_root_system("B(2)"), std::invalid_argument);
}

TEST_CASE("Weyl group sizes") {
  CHECK(weyl_elements(RootSystem::rank1()).size() == 2);
  CHECK(weyl_elements(make_root_system("A(1)")).size() == 2);
  CHECK(weyl_elements(make_root_system("A(2)")).size() == 6);  // S_3
  CHECK(weyl_elements(RootSystem::empty(2)).size() == 1);
}

TEST_CASE("reflections preserve the root set and the weight") {
  auto rs = make_root_system("A(2)");
  Multiplicity k = Multiplicity::uniform(rs, Rational(1, 2));
  Eigen::VectorXd x(3);
  x << 0.3, -1.2, 0.9;
  double w = weight_omega(rs, k, x);
  for (const auto& g : weyl_elements(rs))
    CHECK(weight_omega(rs, k, g.apply(x)) == Catch::Approx(w));
}

TEST_CASE("exact weight matches the floating weight") {
  auto rs = RootSystem::rank1();
  Multiplicity k = Multiplicity::uniform(rs, Rational(1));
  RatVec x{Rational(3, 2)};
  // omega(x) = |x|^{2k} for the rank-one roots +-1
  Eigen::VectorXd xd(1);
  xd << 1.5;
  CHECK(to_double(weight_omega_exact(rs, k, x)) == Catch::Approx(weight_omega(rs, k, xd)));
}

TEST_CASE("orbit, band and hull geometry") {
  auto rs = make_root_system("A(1)");
  auto w = weyl_elements(rs);
  Eigen::VectorXd x(2);
  x << 1.0, 0.0;
  auto orb = orbit(w, x);
  CHECK(orb.size() == 2);  // (1,0) and (0,1)

  // in_band: exists g with |y + g x| <= r
  Eigen::VectorXd y(2);
  y << -1.05, 0.0;
  CHECK(in_band(w, y, x, 0.1));
  y << 5.0, 5.0;
  CHECK_FALSE(in_band(w, y, x, 0.1));

  auto hull = orbit_hull(w, x);
  Eigen::VectorXd mid(2);
  mid << 0.5, 0.5;  // on the segment between the two orbit points
  CHECK(dist_to_hull(hull, mid) == Catch::Approx(0.0).margin(1e-9));
  Eigen::VectorXd off(2);
  off << 2.0, 2.0;
  CHECK(dist_to_hull(hull, off) > 1.0);

  auto sum = hull_sum(hull, hull);
  Eigen::VectorXd two(2);
  two << 2.0, 0.0;
  CHECK(dist_to_hull(sum, two) == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("direct sums concatenate") {
  auto rs = make_root_system("direct_sum(rank1, empty(1))");
  CHECK(rs.ambient_dim == 2);
  CHECK(rs.roots.size() == 2);
  CHECK(rs.num_orbits == 1);
}
