#include <catch2/catch_amalgamated.hpp>

#include "dunkl/suites.hpp"

using namespace dunkl;

TEST_CASE("root system round trip") {
  auto rs = make_root_system("A(2)");
  Multiplicity k = Multiplicity::uniform(rs, Rational(1, 2));
  Json j = to_json(rs, k);
  CHECK(j["name"] == "A(2)");
  CHECK(j["n"] == 3);
  auto [rs2, k2] = root_system_from_json(j);
  CHECK(rs2.roots == rs.roots);
  CHECK(k2.per_orbit() == k.per_orbit());
  Json bad = j;
  bad["n"] = 5;
  CHECK_THROWS_AS(root_system_from_json(bad), std::invalid_argument);
}

TEST_CASE("polynomial round trip keeps exact coefficients") {
  Poly p = Poly::monomial(2, {3, 1}, Rational(22, 7)) - Poly::variable(2, 0);
  Json j = to_json(p);
  Poly q = poly_from_json(j, 2);
  CHECK((p - q).is_zero());
}

TEST_CASE("graded map round trip") {
  auto rs = RootSystem::rank1();
  Multiplicity k = Multiplicity::uniform(rs, Rational(1));
  GradedLinearMap v = build_intertwiner(rs, k, 4);
  GradedLinearMap w = graded_map_from_json(to_json(v));
  for (int n = 0; n <= 4; ++n) {
    Poly p = Poly::monomial(1, Monomial{n}, 1);
    CHECK((v.apply(p) - w.apply(p)).is_zero());
  }
}

TEST_CASE("grid function serialization shape") {
  auto rs = RootSystem::rank1();
  Multiplicity k = Multiplicity::uniform(rs, Rational(1));
  Grid g = box_grid(rs, k, 1.0, 2, 3);
  auto f = sample(g, [](const Eigen::VectorXd& x) { return x(0); });
  Json j = to_json(g, f);
  CHECK(j["nodes"].size() == g.size());
  CHECK(j["weights"].size() == g.size());
  CHECK(j["values"].size() == g.size());
}

TEST_CASE("config validation") {
  Json base{{"seed", 42}};
  CHECK(parse_config(base).seed == 42);
  CHECK_THROWS_AS(parse_config(Json::object()), ConfigError);  // seed mandatory
  Json bad = base;
  bad["grid"] = {{"panels", 2}};
  CHECK_THROWS_AS(parse_config(bad), ConfigError);  // below minimum resolution
  bad = base;
  bad["tolerances"] = {{"mehta", -1.0}};
  CHECK_THROWS_AS(parse_config(bad), ConfigError);
  Json good = base;
  good["tolerances"] = {{"mehta", 1e-8}};
  good["level"] = 2;
  Config c = parse_config(good);
  CHECK(c.tolerance("mehta", 1.0) == 1e-8);
  CHECK(c.tolerance("absent", 0.5) == 0.5);
  CHECK(c.level == 2);
}

TEST_CASE("suite reports are reproducible and structured") {
  Json j{{"seed", 7}, {"poly_trials", 2}, {"intertwiner_degree", 3}};
  Config cfg = parse_config(j);
  SuiteReport a = run_poly_suite(cfg);
  SuiteReport b = run_poly_suite(cfg);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.overall());
  for (const auto& r : a.records) {
    CHECK(!r.id.empty());
    CHECK(r.pass == (r.measured <= r.tolerance));
  }
}

TEST_CASE("tables carry monotone error columns") {
  Json j{{"seed", 1}};
  Config cfg = parse_config(j);
  Table t = emit_table("kernel_truncation", cfg);
  CHECK(t.columns.size() == 5);
  CHECK(t.rows.size() == 4);
  CHECK(t.monotone_ok);
  std::string csv = to_csv(t);
  CHECK(csv.find("N,value,abs_error,tail_bound,within_bound") == 0);
  CHECK_THROWS_AS(emit_table("nope", cfg), ConfigError);
}
