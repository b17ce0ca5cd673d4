#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>

#include "dunkl/grid.hpp"
#include "dunkl/intertwiner.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

using Json = nlohmann::ordered_json;

/// Construction string accepted by make_root_system, rebuilt from the tag.
inline std::string spec_string(const RootSystem& rs) {
  if (rs.name == "rank1") return "rank1";
  if (rs.name == "A") return "A(" + std::to_string(rs.ambient_dim - 1) + ")";
  if (rs.name == "empty") return "empty(" + std::to_string(rs.ambient_dim) + ")";
  throw std::invalid_argument("spec_string: only atomic root systems serialize");
}

inline Json to_json(const RootSystem& rs, const Multiplicity& k) {
  Json j;
  j["name"] = spec_string(rs);
  j["n"] = rs.ambient_dim;
  Json orbits = Json::array();
  for (const auto& v : k.per_orbit()) orbits.push_back(rational_to_string(v));
  j["k_by_orbit"] = orbits;
  return j;
}

inline std::pair<RootSystem, Multiplicity> root_system_from_json(const Json& j) {
  RootSystem rs = make_root_system(j.at("name").get<std::string>());
  if (j.contains("n") && j.at("n").get<int>() != rs.ambient_dim)
    throw std::invalid_argument("root system json: n does not match name");
  RatVec ks;
  for (const auto& s : j.at("k_by_orbit")) ks.push_back(rational_from_string(s.get<std::string>()));
  return {rs, Multiplicity(rs, ks)};
}

inline Json to_json(const Poly& p) {
  Json j = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["exponent"] = m;
    t["coeff"] = rational_to_string(c);
    j.push_back(t);
  }
  return j;
}

inline Poly poly_from_json(const Json& j, int dim) {
  Poly p(dim);
  for (const auto& t : j) {
    Monomial m = t.at("exponent").get<Monomial>();
    if (static_cast<int>(m.size()) != dim)
      throw std::invalid_argument("poly json: exponent length does not match dim");
    p = p + Poly::monomial(dim, m, rational_from_string(t.at("coeff").get<std::string>()));
  }
  return p;
}

inline Json to_json(const GradedLinearMap& v) {
  Json j;
  j["dim"] = v.dim();
  Json degrees = Json::array();
  for (int n = 0; n <= v.max_degree(); ++n) {
    const RatMat& b = v.block(n);
    Json mat = Json::array();
    for (const auto& row : b) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(rational_to_string(e));
      mat.push_back(r);
    }
    degrees.push_back(mat);
  }
  j["degrees"] = degrees;
  return j;
}

inline GradedLinearMap graded_map_from_json(const Json& j) {
  std::vector<RatMat> blocks;
  for (const auto& mat : j.at("degrees")) {
    RatMat b;
    for (const auto& row : mat) {
      RatVec r;
      for (const auto& e : row) r.push_back(rational_from_string(e.get<std::string>()));
      b.push_back(std::move(r));
    }
    blocks.push_back(std::move(b));
  }
  return GradedLinearMap(j.at("dim").get<int>(), std::move(blocks));
}

/// Grid function: nodes, omega-inclusive weights, complex values as [re, im].
inline Json to_json(const Grid& g, const Eigen::VectorXcd& values) {
  Json j;
  Json nodes = Json::array(), weights = Json::array(), vals = Json::array();
  for (size_t i = 0; i < g.size(); ++i) {
    Json pt = Json::array();
    for (int d = 0; d < g.nodes[i].size(); ++d) pt.push_back(g.nodes[i](d));
    nodes.push_back(pt);
    weights.push_back(g.weights[i]);
    auto v = values(static_cast<Eigen::Index>(i));
    vals.push_back(Json::array({v.real(), v.imag()}));
  }
  j["nodes"] = nodes;
  j["weights"] = weights;
  j["values"] = vals;
  return j;
}

inline void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace dunkl
