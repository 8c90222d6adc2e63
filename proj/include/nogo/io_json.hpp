#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nogo/gaussian_rational.hpp"
#include "nogo/lie_algebra.hpp"
#include "nogo/orbit.hpp"
#include "nogo/poisson.hpp"

namespace nogo {

using Json = nlohmann::json;

// --- rationals / vectors / matrices as decimal strings ---------------------

inline Json rat_to_json(const Rat& q) { return to_string(q); }
inline Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("expected rational string, got " + j.dump());
  return parse_rat(j.get<std::string>());
}

inline Json vec_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}
inline std::vector<Rat> vec_from_json(const Json& j) {
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline Matrix<Rat> matrix_from_json(const Json& j) {
  Matrix<Rat> m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const Json& e = j.at("entries");
  if (e.size() != m.rows()) throw InputError("matrix row count mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (e[r].size() != m.cols()) throw InputError("matrix column count mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rat(e[r][c].get<std::string>());
  }
  return m;
}

inline Matrix<GaussRat> gmatrix_from_json(const Json& j) {
  Matrix<GaussRat> m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const Json& e = j.at("entries");
  if (e.size() != m.rows()) throw InputError("matrix row count mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (e[r].size() != m.cols()) throw InputError("matrix column count mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_gauss(e[r][c].get<std::string>());
  }
  return m;
}

// --- algebra: { dim, labels, brackets: [{i, j, coeffs: [{k, v}]}] } --------
// Only i < j entries are stored (1-based); the antisymmetric half is derived.

inline Json algebra_to_json(const LieAlgebra& L) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Json coeffs = Json::array();
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (L.c(i, j, k) != 0)
          coeffs.push_back(Json{{"k", k + 1}, {"v", to_string(L.c(i, j, k))}});
      if (!coeffs.empty())
        brackets.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coeffs", std::move(coeffs)}});
    }
  return Json{{"dim", L.dim()}, {"labels", L.labels()}, {"brackets", std::move(brackets)}};
}

inline LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim")) throw InputError("algebra JSON needs a dim field");
  const std::size_t n = j.at("dim").get<std::size_t>();
  if (n == 0) throw InputError("algebra dimension must be positive");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw InputError("labels length does not match dim");
  } else {
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  }
  std::vector<Rat> c(n * n * n, Rat(0));
  std::vector<bool> seen(n * n, false);
  for (const Json& b : j.value("brackets", Json::array())) {
    const std::size_t i = b.at("i").get<std::size_t>();
    const std::size_t jj = b.at("j").get<std::size_t>();
    if (i < 1 || jj < 1 || i > n || jj > n) throw InputError("bracket index out of range");
    if (i >= jj)
      throw InputError("bracket entries must have i < j (i >= j is derived by antisymmetry)");
    if (seen[(i - 1) * n + (jj - 1)]) throw InputError("duplicate bracket entry");
    seen[(i - 1) * n + (jj - 1)] = true;
    for (const Json& t : b.at("coeffs")) {
      const std::size_t k = t.at("k").get<std::size_t>();
      if (k < 1 || k > n) throw InputError("coefficient index out of range");
      Rat v = parse_rat(t.at("v").get<std::string>());
      c[((i - 1) * n + (jj - 1)) * n + (k - 1)] = v;
      c[((jj - 1) * n + (i - 1)) * n + (k - 1)] = -v;
    }
  }
  return new_lie_algebra(std::move(c), std::move(labels));
}

/// Accepts either a builtin name string or an inline algebra object.
inline LieAlgebra algebra_from_json_or_name(const Json& j) {
  if (j.is_string()) return builtin(j.get<std::string>());
  return algebra_from_json(j);
}

// --- orbit point: { algebra, h } -------------------------------------------

struct OwnedOrbitPoint {
  LieAlgebra algebra;
  std::vector<Rat> h;
};

inline OwnedOrbitPoint orbit_point_from_json(const Json& j) {
  OwnedOrbitPoint p{algebra_from_json_or_name(j.at("algebra")), vec_from_json(j.at("h"))};
  if (p.h.size() != p.algebra.dim()) throw InputError("orbit point length does not match dim");
  return p;
}

inline Json orbit_point_to_json(const LieAlgebra& L, const std::vector<Rat>& h) {
  return Json{{"algebra", algebra_to_json(L)}, {"h", vec_to_json(h)}};
}

// --- ideals -----------------------------------------------------------------

inline Json ideal_to_json(const OrbitIdeal& ideal) {
  Json out;
  if (const auto& s = ideal.sphere_description()) {
    out["type"] = "sphere";
    out["radius"] = to_string(s->radius);
    Json factors = Json::array();
    for (const auto& f : s->factors) factors.push_back(Json{f[0] + 1, f[1] + 1, f[2] + 1});
    out["factors"] = std::move(factors);
  } else {
    out["type"] = "substitution";
  }
  Json rules = Json::array();
  for (const auto& r : ideal.rules())
    rules.push_back(Json{{"lead", to_string(r.lead)}, {"replacement", to_string(r.replacement)}});
  out["rules"] = std::move(rules);
  return out;
}

inline OrbitIdeal ideal_from_json(const Json& j, std::size_t nvars) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "sphere") {
    std::vector<std::array<std::size_t, 3>> factors;
    for (const auto& f : j.at("factors")) {
      if (f.size() != 3) throw InputError("sphere factor must list three variables");
      factors.push_back({f[0].get<std::size_t>() - 1, f[1].get<std::size_t>() - 1,
                         f[2].get<std::size_t>() - 1});
      for (auto v : factors.back())
        if (v >= nvars) throw InputError("sphere factor variable out of range");
    }
    return OrbitIdeal::sphere(nvars, factors, parse_rat(j.at("radius").get<std::string>()));
  }
  if (type == "substitution") {
    std::vector<SubstitutionRule> rules;
    for (const auto& r : j.at("rules"))
      rules.push_back({parse_monomial(nvars, r.at("lead").get<std::string>()),
                       parse_polynomial(nvars, r.at("replacement").get<std::string>())});
    return OrbitIdeal(std::move(rules));
  }
  throw InputError("unknown ideal type '" + type + "'");
}

// --- spaces ------------------------------------------------------------------

inline Json space_to_json(const PolySpace& S) {
  Json out{{"algebra", algebra_to_json(*S.algebra)}, {"cap", S.cap}};
  out["ideal"] = S.ideal ? ideal_to_json(*S.ideal) : Json(nullptr);
  Json basis = Json::array();
  for (const auto& m : S.basis) basis.push_back(to_string(m));
  out["basis"] = std::move(basis);
  return out;
}

}  // namespace nogo
