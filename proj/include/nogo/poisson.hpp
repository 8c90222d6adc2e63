#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "nogo/lie_algebra.hpp"
#include "nogo/linalg.hpp"
#include "nogo/polynomial.hpp"

namespace nogo {

/// {f,g} = sum_{i,j,k} c^k_{ij} x_k (df/dx_i)(dg/dx_j): the bracket induced
/// on polynomials over the dual space by the structure constants and the
/// Leibniz rule.
inline Polynomial lie_poisson_bracket(const Polynomial& f, const Polynomial& g,
                                      const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (f.nvars() != n || g.nvars() != n)
    throw VariableMismatch("bracket operands must have one variable per basis element");
  std::vector<Polynomial> df(n, Polynomial(n)), dg(n, Polynomial(n));
  std::vector<bool> have_df(n, false), have_dg(n, false);
  Polynomial out(n);
  for (const auto& e : L.nonzero()) {
    if (!have_df[e.i]) {
      df[e.i] = f.derivative(e.i);
      have_df[e.i] = true;
    }
    if (!have_dg[e.j]) {
      dg[e.j] = g.derivative(e.j);
      have_dg[e.j] = true;
    }
    if (df[e.i].is_zero() || dg[e.j].is_zero()) continue;
    Monomial xk(n);
    xk.e[e.k] = 1;
    out += (df[e.i] * dg[e.j]).times_monomial(xk, e.v);
  }
  return out;
}

/// One substitution relation: every occurrence of `lead` rewrites to
/// `replacement`, whose monomials are all strictly smaller in graded-lex
/// order (validated), so rewriting terminates.
struct SubstitutionRule {
  Monomial lead;
  Polynomial replacement;
};

/// Product-of-spheres structure behind a sphere-type ideal; kept alongside
/// the rewrite rules so certificates can name the factors and radius.
struct SphereDescription {
  std::vector<std::array<std::size_t, 3>> factors;  // zero-based variable triples
  Rat radius;
};

/// The supported orbit ideals: finitely many substitution relations with
/// strictly decreasing rewrites. sphere() builds the exactly-handled case,
/// one quadric relation per su(2)-type factor.
class OrbitIdeal {
 public:
  OrbitIdeal() = default;

  explicit OrbitIdeal(std::vector<SubstitutionRule> rules) : rules_(std::move(rules)) {
    for (const auto& r : rules_) {
      if (r.lead.is_constant())
        throw NonReducibleRelation("relation lead monomial must be nonconstant");
      for (const auto& [m, c] : r.replacement.terms())
        if (graded_lex_cmp(m, r.lead) >= 0)
          throw NonReducibleRelation("replacement term " + to_string(m) +
                                     " not smaller than lead " + to_string(r.lead));
    }
  }

  /// x_a^2 + x_b^2 + x_c^2 = r^2 per factor {a,b,c} (zero-based, a < b < c),
  /// in substitution form x_a^2 -> r^2 - x_b^2 - x_c^2.
  static OrbitIdeal sphere(std::size_t nvars, const std::vector<std::array<std::size_t, 3>>& factors,
                           const Rat& radius) {
    if (radius <= 0) throw InputError("sphere radius must be positive");
    std::vector<SubstitutionRule> rules;
    for (const auto& f : factors) {
      Monomial lead(nvars);
      lead.e[f[0]] = 2;
      Polynomial rep = Polynomial::constant(nvars, radius * radius);
      for (std::size_t t = 1; t < 3; ++t) {
        Monomial sq(nvars);
        sq.e[f[t]] = 2;
        rep.add_term(sq, Rat(-1));
      }
      rules.push_back({lead, rep});
    }
    OrbitIdeal ideal(std::move(rules));
    ideal.sphere_ = SphereDescription{factors, radius};
    return ideal;
  }

  const std::vector<SubstitutionRule>& rules() const { return rules_; }
  const std::optional<SphereDescription>& sphere_description() const { return sphere_; }

  bool is_normal_form(const Monomial& m) const {
    for (const auto& r : rules_)
      if (r.lead.divides(m)) return false;
    return true;
  }

 private:
  std::vector<SubstitutionRule> rules_;
  std::optional<SphereDescription> sphere_;
};

/// Consecutive 3-blocks with eps-pattern brackets (uniform nonzero scale per
/// block) and vanishing cross-block brackets; the shape on which sphere
/// ideals are exact. Empty optional when the algebra has no such splitting.
inline std::optional<std::vector<std::array<std::size_t, 3>>> su2_block_structure(
    const LieAlgebra& L) {
  if (L.dim() == 0 || L.dim() % 3 != 0) return std::nullopt;
  std::vector<std::array<std::size_t, 3>> factors;
  for (std::size_t p = 0; p < L.dim() / 3; ++p) factors.push_back({3 * p, 3 * p + 1, 3 * p + 2});
  for (const auto& e : L.nonzero())
    if (e.i / 3 != e.j / 3 || e.i / 3 != e.k / 3) return std::nullopt;
  for (const auto& f : factors) {
    const Rat lambda = L.c(f[0], f[1], f[2]);
    if (lambda == 0) return std::nullopt;
    for (int a = 0; a < 3; ++a) {
      int b = (a + 1) % 3, c = (a + 2) % 3;
      if (L.c(f[a], f[b], f[c]) != lambda) return std::nullopt;
      // any bracket component off the eps pattern disqualifies the block
      if (L.c(f[a], f[b], f[a]) != 0 || L.c(f[a], f[b], f[b]) != 0) return std::nullopt;
    }
  }
  return factors;
}

/// Unique normal form under the ideal's rewrites; idempotent.
inline Polynomial reduce(Polynomial f, const OrbitIdeal& ideal) {
  while (true) {
    Monomial target;
    const SubstitutionRule* rule = nullptr;
    Rat coeff;
    for (const auto& [m, c] : f.terms()) {  // descending, so first hit is the largest
      for (const auto& r : ideal.rules()) {
        if (r.lead.divides(m)) {
          target = m;
          rule = &r;
          coeff = c;
          break;
        }
      }
      if (rule) break;
    }
    if (!rule) return f;
    Monomial quotient = target.divided_by(rule->lead);
    f.add_term(target, -coeff);
    f += rule->replacement.times_monomial(quotient, coeff);
  }
}

/// Degree-capped basis of the polynomial algebra (or its quotient by an
/// orbit ideal): all normal-form monomials of degree <= cap, ascending
/// graded-lex, constant monomial first.
struct PolySpace {
  const LieAlgebra* algebra = nullptr;
  std::optional<OrbitIdeal> ideal;
  unsigned cap = 0;
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t, GradedLexLess> index;

  std::size_t dim() const { return basis.size(); }

  Polynomial reduce(Polynomial f) const {
    return ideal ? nogo::reduce(std::move(f), *ideal) : f;
  }

  /// Coordinates of a normal-form polynomial; reports the first monomial
  /// outside the basis through DegreeEscape.
  std::vector<Rat> to_vec(const Polynomial& f) const {
    std::vector<Rat> v(dim(), Rat(0));
    for (const auto& [m, c] : f.terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw DegreeEscape(dim(), to_string(m));
      v[it->second] = c;
    }
    return v;
  }

  Polynomial from_vec(const std::vector<Rat>& v) const {
    Polynomial f(algebra->dim());
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(basis[i], v[i]);
    return f;
  }

  Polynomial basis_poly(std::size_t i) const { return Polynomial::from_monomial(basis[i], 1); }
};

namespace detail {
inline void enumerate_monomials(std::size_t nvars, unsigned cap, std::size_t var, Monomial& cur,
                                long used, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; used + e <= cap; ++e) {
    cur.e[var] = e;
    enumerate_monomials(nvars, cap, var + 1, cur, used + e, out);
  }
  cur.e[var] = 0;
}
}  // namespace detail

inline PolySpace poly_space(const LieAlgebra& L, unsigned cap,
                            std::optional<OrbitIdeal> ideal = std::nullopt) {
  PolySpace S;
  S.algebra = &L;
  S.ideal = std::move(ideal);
  S.cap = cap;
  std::vector<Monomial> all;
  Monomial cur(L.dim());
  detail::enumerate_monomials(L.dim(), cap, 0, cur, 0, all);
  for (const auto& m : all)
    if (!S.ideal || S.ideal->is_normal_form(m)) S.basis.push_back(m);
  std::sort(S.basis.begin(), S.basis.end(),
            [](const Monomial& a, const Monomial& b) { return graded_lex_cmp(a, b) < 0; });
  if (S.basis.size() > max_basis_dim())
    throw DimensionCap("basis size " + std::to_string(S.basis.size()) + " exceeds cap " +
                       std::to_string(max_basis_dim()) + " (set NOGO_MAX_DIM to raise)");
  for (std::size_t i = 0; i < S.basis.size(); ++i) S.index.emplace(S.basis[i], i);
  return S;
}

/// Exact matrix of a linear operator on a PolySpace basis.
struct LinOp {
  const PolySpace* space = nullptr;
  Matrix<Rat> mat;
};

/// Columns are the images of basis monomials; images must stay inside the
/// space after reduction, else DegreeEscape identifies the offender.
inline LinOp build_operator(const PolySpace& S,
                            const std::function<Polynomial(const Polynomial&)>& fn) {
  Matrix<Rat> m(S.dim(), S.dim());
  for (std::size_t j = 0; j < S.dim(); ++j) {
    Polynomial img = S.reduce(fn(S.basis_poly(j)));
    std::vector<Rat> col;
    try {
      col = S.to_vec(img);
    } catch (const DegreeEscape& e) {
      throw DegreeEscape(j, e.what());
    }
    m.set_col(j, col);
  }
  return LinOp{&S, std::move(m)};
}

/// Hamiltonian action of f at polynomial level: g -> {f, g} (reduced).
inline LinOp hamiltonian_operator(const Polynomial& f, const PolySpace& S) {
  return build_operator(
      S, [&](const Polynomial& g) { return lie_poisson_bracket(f, S.reduce(g), *S.algebra); });
}

/// Delta f = -sum_i {x_i, {x_i, f}} over the structure basis, with reduction
/// after each bracket.
inline LinOp laplacian(const LieAlgebra& L, const PolySpace& S) {
  if (S.algebra->dim() != L.dim()) throw VariableMismatch("space does not match algebra");
  return build_operator(S, [&](const Polynomial& f) {
    Polynomial acc(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) {
      Polynomial xi = Polynomial::variable(L.dim(), i);
      Polynomial inner = S.reduce(lie_poisson_bracket(xi, f, L));
      acc += lie_poisson_bracket(xi, inner, L);
    }
    return -acc;
  });
}

struct LaplacianAnalysis {
  std::size_t rank = 0;
  Matrix<Rat> kernel;       // rows are kernel basis vectors
  Matrix<Rat> image;        // rows are an RREF basis of the column space
  UniPoly<Rat> char_poly;   // monic, ascending coefficients
};

inline LaplacianAnalysis laplacian_analysis(const LinOp& op) {
  LaplacianAnalysis a;
  a.kernel = kernel_basis(op.mat);
  a.image = column_space_basis(op.mat);
  a.rank = a.image.rows();
  a.char_poly = char_poly(op.mat);
  return a;
}

/// Mean as the projection constant: mean(f) is the unique c with
/// f - c in image(Delta). Checked preconditions: image and kernel of Delta
/// intersect trivially and constants are not in the image.
class MeanContext {
 public:
  explicit MeanContext(const PolySpace& S)
      : space_(&S), delta_(laplacian(*S.algebra, S)) {
    image_ = column_space_basis(delta_.mat);
    Matrix<Rat> ker = kernel_basis(delta_.mat);
    split_ok_ = rank(image_) + rank(ker) == rank(image_.vstack(ker));
    std::vector<Rat> e0(S.dim(), Rat(0));
    if (!S.basis.empty() && S.basis[0].is_constant()) e0[0] = 1;
    const_in_image_ = Subspace::in_row_space(image_, e0);
    Matrix<Rat> m(S.dim(), 1 + image_.rows());
    for (std::size_t r = 0; r < S.dim(); ++r) m(r, 0) = e0[r];
    for (std::size_t b = 0; b < image_.rows(); ++b)
      for (std::size_t r = 0; r < S.dim(); ++r) m(r, 1 + b) = image_(b, r);
    solver_.emplace(m);
  }

  const PolySpace& space() const { return *space_; }
  const LinOp& delta() const { return delta_; }
  const Matrix<Rat>& image() const { return image_; }
  bool split_ok() const { return split_ok_; }

  Rat mean(const Polynomial& f) const {
    if (!split_ok_)
      throw MeanUndefined("image and kernel of the Laplacian intersect nontrivially");
    if (const_in_image_) throw MeanUndefined("constants lie in the Laplacian image");
    std::vector<Rat> v;
    try {
      v = space_->to_vec(space_->reduce(f));
    } catch (const DegreeEscape&) {
      throw MeanUndefined("polynomial does not lie in the space");
    }
    auto out = solver_->solve(v);
    if (!out.feasible())
      throw MeanUndefined("polynomial is not a constant plus a Laplacian image");
    return (*out.solution)[0];
  }

 private:
  const PolySpace* space_;
  LinOp delta_;
  Matrix<Rat> image_;
  bool split_ok_ = false;
  bool const_in_image_ = false;
  std::optional<LinearSolver<Rat>> solver_;
};

inline Rat mean(const Polynomial& f, const PolySpace& S) { return MeanContext(S).mean(f); }

/// Volume-normalized inner product matrix G_{ab} = mean(e_a e_b), products
/// reduced through the ideal. Means are taken in the doubled-degree space.
struct GramForm {
  const PolySpace* space = nullptr;
  Matrix<Rat> matrix;
};

inline GramForm gram(const PolySpace& S) {
  PolySpace big = poly_space(*S.algebra, 2 * S.cap, S.ideal);
  MeanContext mc(big);
  Matrix<Rat> g(S.dim(), S.dim());
  for (std::size_t a = 0; a < S.dim(); ++a)
    for (std::size_t b = a; b < S.dim(); ++b) {
      Rat v = mc.mean(S.basis_poly(a) * S.basis_poly(b));
      g(a, b) = v;
      g(b, a) = v;
    }
  return GramForm{&S, std::move(g)};
}

}  // namespace nogo
