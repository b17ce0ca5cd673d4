#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

/// Orthogonal group element with exact rational entries.
struct GroupElement {
  RatMat matrix;

  bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
  bool operator<(const GroupElement& o) const { return matrix < o.matrix; }

  RatVec apply(const RatVec& x) const { return mat_vec(matrix, x); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size());
    for (size_t i = 0; i < matrix.size(); ++i)
      for (size_t j = 0; j < matrix.size(); ++j)
        if (matrix[i][j] != 0) y(i) += to_double(matrix[i][j]) * x(j);
    return y;
  }
};

/// Reduced root system with exact rational root coordinates.
///
/// Roots are stored as the full set; positive_roots holds indices of a chosen
/// half. orbit_of[i] gives the W-orbit index of root i, which is what the
/// multiplicity map is keyed on.
class RootSystem {
 public:
  int ambient_dim = 0;
  std::vector<RatVec> roots;
  std::vector<int> positive_roots;
  std::vector<int> orbit_of;
  int num_orbits = 0;
  std::string name;     // construction tag for serialization
  int rank_param = 0;   // the n in A(n); 0 otherwise

  static RootSystem rank1() {
    RootSystem rs;
    rs.ambient_dim = 1;
    rs.roots = {{Rational(1)}, {Rational(-1)}};
    rs.positive_roots = {0};
    rs.orbit_of = {0, 0};
    rs.num_orbits = 1;
    rs.name = "rank1";
    rs.validate();
    return rs;
  }

  /// A(n): roots +-(e_i - e_j) in dimension n+1.
  static RootSystem type_A(int n) {
    if (n < 1) throw std::invalid_argument("A(n) requires n >= 1");
    RootSystem rs;
    rs.ambient_dim = n + 1;
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        RatVec r(n + 1, Rational(0)), m(n + 1, Rational(0));
        r[i] = 1;
        r[j] = -1;
        m[i] = -1;
        m[j] = 1;
        rs.positive_roots.push_back(static_cast<int>(rs.roots.size()));
        rs.roots.push_back(r);
        rs.roots.push_back(m);
      }
    }
    rs.orbit_of.assign(rs.roots.size(), 0);
    rs.num_orbits = 1;
    rs.name = "A";
    rs.rank_param = n;
    rs.validate();
    return rs;
  }

  /// Ambient space with no roots (free directions only).
  static RootSystem empty(int dim) {
    if (dim < 1) throw std::invalid_argument("empty(dim) requires dim >= 1");
    RootSystem rs;
    rs.ambient_dim = dim;
    rs.name = "empty";
    rs.rank_param = dim;
    return rs;
  }

  /// Embeds the factors in consecutive orthogonal coordinate blocks.
  static RootSystem direct_sum(const std::vector<RootSystem>& factors) {
    RootSystem rs;
    rs.name = "direct_sum";
    for (const auto& f : factors) {
      int off = rs.ambient_dim;
      for (size_t i = 0; i < f.roots.size(); ++i) {
        RatVec r(off + f.ambient_dim, Rational(0));
        // leading zeros for earlier blocks; trailing blocks padded below
        for (int j = 0; j < f.ambient_dim; ++j) r[off + j] = f.roots[i][j];
        rs.roots.push_back(std::move(r));
        rs.orbit_of.push_back(rs.num_orbits + f.orbit_of[i]);
      }
      for (int p : f.positive_roots)
        rs.positive_roots.push_back(p + static_cast<int>(rs.roots.size() - f.roots.size()));
      rs.num_orbits += f.num_orbits;
      rs.ambient_dim += f.ambient_dim;
    }
    for (auto& r : rs.roots) r.resize(rs.ambient_dim, Rational(0));
    rs.validate();
    return rs;
  }

  size_t num_roots() const { return roots.size(); }

  /// Reflection s_alpha for root index i, as an exact orthogonal matrix.
  GroupElement reflection(int i) const {
    const RatVec& a = roots[i];
    Rational aa = dot(a, a);
    RatMat m = rat_identity(ambient_dim);
    for (int r = 0; r < ambient_dim; ++r)
      for (int c = 0; c < ambient_dim; ++c) m[r][c] -= 2 * a[r] * a[c] / aa;
    return {m};
  }

  /// 2<a,b>/<a,a> in Z for all root pairs.
  bool is_integral() const {
    for (size_t i = 0; i < roots.size(); ++i) {
      Rational aa = dot(roots[i], roots[i]);
      for (size_t j = 0; j < roots.size(); ++j) {
        Rational c = 2 * dot(roots[i], roots[j]) / aa;
        if (denominator(c) != 1) return false;
      }
    }
    return true;
  }

  /// Checks the defining invariants; throws on violation.
  void validate() const {
    if (ambient_dim < 1) throw std::invalid_argument("root system: ambient_dim < 1");
    std::set<RatVec> root_set(roots.begin(), roots.end());
    if (root_set.size() != roots.size()) throw std::invalid_argument("root system: duplicate roots");
    std::set<int> pos(positive_roots.begin(), positive_roots.end());
    if (2 * pos.size() != roots.size())
      throw std::invalid_argument("root system: positive half has wrong size");
    for (size_t i = 0; i < roots.size(); ++i) {
      const RatVec& a = roots[i];
      if (dot(a, a) == 0) throw std::invalid_argument("root system: zero root");
      RatVec neg(a.size());
      for (size_t j = 0; j < a.size(); ++j) neg[j] = -a[j];
      if (!root_set.count(neg)) throw std::invalid_argument("root system: not symmetric");
      // reduced: only scalar multiples present are +-alpha
      for (const auto& b : roots) {
        if (parallel(a, b) && b != a && b != neg)
          throw std::invalid_argument("root system: not reduced");
      }
    }
    // closed under its own reflections
    for (size_t i = 0; i < roots.size(); ++i) {
      GroupElement s = reflection(static_cast<int>(i));
      for (const auto& b : roots) {
        if (!root_set.count(s.apply(b))) throw std::invalid_argument("root system: not closed");
      }
    }
  }

  /// Orthonormal (double precision) basis of span(R); empty if no roots.
  Eigen::MatrixXd root_span_basis() const {
    Eigen::MatrixXd m(ambient_dim, static_cast<Eigen::Index>(roots.size()));
    for (size_t j = 0; j < roots.size(); ++j)
      for (int i = 0; i < ambient_dim; ++i) m(i, static_cast<Eigen::Index>(j)) = to_double(roots[j][i]);
    if (roots.empty()) return Eigen::MatrixXd(ambient_dim, 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-10 * svd.singularValues()(0)) ++rank;
    return svd.matrixU().leftCols(rank);
  }

 private:
  static bool parallel(const RatVec& a, const RatVec& b) {
    // a x b == 0 componentwise cross-check
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = i + 1; j < a.size(); ++j)
        if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
  }
};

/// Parses {A(n), rank1, empty(d)} and nested direct_sum(...).
inline RootSystem make_root_system(const std::string& spec) {
  auto fail = [&] { throw std::invalid_argument("unknown root system: " + spec); };
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "rank1") return RootSystem::rank1();
  if (s.rfind("A(", 0) == 0 && s.back() == ')') return RootSystem::type_A(std::stoi(s.substr(2)));
  if (s.rfind("empty(", 0) == 0 && s.back() == ')')
    return RootSystem::empty(std::stoi(s.substr(6)));
  if (s.rfind("direct_sum(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(11, s.size() - 12);
    std::vector<RootSystem> factors;
    int depth = 0;
    std::string cur;
    for (char c : inner) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        factors.push_back(make_root_system(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) factors.push_back(make_root_system(cur));
    if (factors.empty()) fail();
    return RootSystem::direct_sum(factors);
  }
  fail();
  return {};  // unreachable
}

/// W-invariant multiplicity, stored per root orbit; values are >= 0.
class Multiplicity {
 public:
  Multiplicity() = default;
  Multiplicity(const RootSystem& rs, const RatVec& per_orbit) : values_(per_orbit) {
    if (static_cast<int>(per_orbit.size()) != rs.num_orbits)
      throw std::invalid_argument("multiplicity: wrong number of orbit values");
    for (const auto& v : per_orbit)
      if (v < 0) throw std::invalid_argument("multiplicity: negative value");
  }
  /// Same value on every orbit.
  static Multiplicity uniform(const RootSystem& rs, const Rational& k) {
    return Multiplicity(rs, RatVec(rs.num_orbits, k));
  }

  const Rational& of_root(const RootSystem& rs, int root_index) const {
    return values_[rs.orbit_of[root_index]];
  }
  const RatVec& per_orbit() const { return values_; }
  bool all_zero() const {
    for (const auto& v : values_)
      if (v != 0) return false;
    return true;
  }
  bool all_integer() const {
    for (const auto& v : values_)
      if (denominator(v) != 1) return false;
    return true;
  }
  /// Sum of k_alpha over all roots.
  Rational total(const RootSystem& rs) const {
    Rational s = 0;
    for (size_t i = 0; i < rs.roots.size(); ++i) s += of_root(rs, static_cast<int>(i));
    return s;
  }

 private:
  RatVec values_;
};

/// Breadth-first closure of the reflections under multiplication.
inline std::vector<GroupElement> weyl_elements(const RootSystem& rs, size_t cap = 10080) {
  std::set<GroupElement> seen;
  std::vector<GroupElement> order;
  GroupElement id{rat_identity(rs.ambient_dim)};
  seen.insert(id);
  order.push_back(id);
  std::vector<GroupElement> gens;
  for (int p : rs.positive_roots) gens.push_back(rs.reflection(p));
  size_t head = 0;
  while (head < order.size()) {
    GroupElement cur = order[head++];
    for (const auto& g : gens) {
      GroupElement next{mat_mul(g.matrix, cur.matrix)};
      if (seen.insert(next).second) {
        order.push_back(next);
        if (order.size() > cap) throw std::invalid_argument("weyl_elements: closure exceeds cap");
      }
    }
  }
  return order;
}

/// omega(x) = prod over all roots of |<alpha,x>|^{k_alpha}.
inline double weight_omega(const RootSystem& rs, const Multiplicity& k, const Eigen::VectorXd& x) {
  double w = 1.0;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    double kk = to_double(k.of_root(rs, static_cast<int>(i)));
    if (kk == 0) continue;
    double a = 0;
    for (int j = 0; j < rs.ambient_dim; ++j) a += to_double(rs.roots[i][j]) * x(j);
    w *= std::pow(std::abs(a), kk);
  }
  return w;
}

/// Exact omega for integer multiplicities.
inline Rational weight_omega_exact(const RootSystem& rs, const Multiplicity& k, const RatVec& x) {
  if (!k.all_integer()) throw std::invalid_argument("weight_omega_exact: non-integer multiplicity");
  Rational w = 1;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    long e = k.of_root(rs, static_cast<int>(i)).convert_to<long>();
    Rational a = dot(rs.roots[i], x);
    if (a < 0) a = -a;
    for (long j = 0; j < e; ++j) w *= a;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Support geometry

/// W-orbit of a point (deduplicated, double precision).
inline std::vector<Eigen::VectorXd> orbit(const std::vector<GroupElement>& w,
                                          const Eigen::VectorXd& x) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& g : w) {
    Eigen::VectorXd y = g.apply(x);
    bool dup = false;
    for (const auto& z : out)
      if ((z - y).norm() < 1e-12 * (1 + y.norm())) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(y);
  }
  return out;
}

/// Whether (x, y) lies in the orbit band D_r^W: exists w with |x + w y| <= r.
inline bool in_band(const std::vector<GroupElement>& w, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& y, double r) {
  for (const auto& g : w)
    if ((x + g.apply(y)).norm() <= r + 1e-12) return true;
  return false;
}

/// Euclidean distance from q to the convex hull of pts (Frank-Wolfe on the simplex).
inline double dist_to_hull(const std::vector<Eigen::VectorXd>& pts, const Eigen::VectorXd& q) {
  if (pts.empty()) throw std::invalid_argument("dist_to_hull: empty point set");
  Eigen::VectorXd p = pts[0];
  for (int iter = 0; iter < 2000; ++iter) {
    Eigen::VectorXd grad = p - q;
    // vertex minimizing <grad, v>
    int best = 0;
    double bv = grad.dot(pts[0]);
    for (size_t i = 1; i < pts.size(); ++i) {
      double v = grad.dot(pts[i]);
      if (v < bv) {
        bv = v;
        best = static_cast<int>(i);
      }
    }
    Eigen::VectorXd d = pts[best] - p;
    double gap = -grad.dot(d);
    if (gap < 1e-14) break;
    double step = std::min(1.0, gap / std::max(d.squaredNorm(), 1e-300));
    p += step * d;
  }
  return (p - q).norm();
}

/// Extreme points of the convex hull of a finite set.
inline std::vector<Eigen::VectorXd> hull_vertices(std::vector<Eigen::VectorXd> pts) {
  std::vector<Eigen::VectorXd> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<Eigen::VectorXd> rest;
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    if (rest.empty() || dist_to_hull(rest, pts[i]) > 1e-9 * (1 + pts[i].norm()))
      out.push_back(pts[i]);
  }
  return out;
}

/// Vertex list of co(W.x).
inline std::vector<Eigen::VectorXd> orbit_hull(const std::vector<GroupElement>& w,
                                               const Eigen::VectorXd& x) {
  return hull_vertices(orbit(w, x));
}

/// Vertices of the Minkowski sum hull co(A) + co(B).
inline std::vector<Eigen::VectorXd> hull_sum(const std::vector<Eigen::VectorXd>& a,
                                             const std::vector<Eigen::VectorXd>& b) {
  std::vector<Eigen::VectorXd> sums;
  for (const auto& p : a)
    for (const auto& q : b) sums.push_back(p + q);
  return hull_vertices(sums);
}

}  // namespace dunkl
