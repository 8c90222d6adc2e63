#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nogo/gaussian_rational.hpp"
#include "nogo/linalg.hpp"
#include "nogo/rational.hpp"

namespace nogo {

/// Finite-dimensional Lie algebra over Q, given by exact structure constants
/// c^k_{ij} for [e_i, e_j] = sum_k c^k_{ij} e_k. Instances are immutable once
/// validated; antisymmetry and the Jacobi identity hold exactly.
class LieAlgebra {
 public:
  struct CEntry {
    std::size_t i, j, k;
    Rat v;
  };

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// c^k_{ij}, zero-based indices.
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  const std::vector<CEntry>& nonzero() const { return nonzero_; }

  /// Coordinates of [u, v].
  std::vector<Rat> bracket(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    std::vector<Rat> w(dim_, Rat(0));
    for (const CEntry& e : nonzero_) {
      if (u[e.i] == 0 || v[e.j] == 0) continue;
      w[e.k] += e.v * u[e.i] * v[e.j];
    }
    return w;
  }

  /// Matrix of ad_h = [h, .] acting on coordinates.
  Matrix<Rat> ad(const std::vector<Rat>& h) const {
    Matrix<Rat> m(dim_, dim_);
    for (const CEntry& e : nonzero_) {
      if (h[e.i] == 0) continue;
      m(e.k, e.j) += h[e.i] * e.v;
    }
    return m;
  }

  Matrix<Rat> ad_basis(std::size_t i) const {
    std::vector<Rat> h(dim_, Rat(0));
    h[i] = 1;
    return ad(h);
  }

  std::vector<Rat> basis_vector(std::size_t i) const {
    std::vector<Rat> v(dim_, Rat(0));
    v[i] = 1;
    return v;
  }

  /// Re-runs the construction-time invariant checks (useful after
  /// deserialization or deliberate tampering in tests).
  void validate() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          Rat r = c(i, j, k) + c(j, i, k);
          if (r != 0) throw AntisymmetryViolation(i + 1, j + 1, k + 1, to_string(r));
        }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k)
          for (std::size_t l = 0; l < dim_; ++l) {
            Rat r = 0;
            for (std::size_t m = 0; m < dim_; ++m)
              r += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
            if (r != 0) throw JacobiViolation(i + 1, j + 1, k + 1, l + 1, to_string(r));
          }
  }

  friend LieAlgebra new_lie_algebra(std::vector<Rat> c, std::vector<std::string> labels);

 private:
  LieAlgebra() = default;

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rat> c_;  // dense dim^3 tensor, index ((i*dim)+j)*dim + k
  std::vector<CEntry> nonzero_;
};

/// Validated construction from a dense dim^3 tensor (index ((i*dim)+j)*dim+k).
inline LieAlgebra new_lie_algebra(std::vector<Rat> c, std::vector<std::string> labels) {
  LieAlgebra L;
  std::size_t dim = labels.size();
  if (c.size() != dim * dim * dim) throw InputError("structure tensor must have dim^3 entries");
  L.dim_ = dim;
  L.labels_ = std::move(labels);
  L.c_ = std::move(c);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (L.c(i, j, k) != 0) L.nonzero_.push_back({i, j, k, L.c(i, j, k)});
  L.validate();
  return L;
}

/// Linear subspace of a Lie algebra, stored as a reduced row-echelon basis so
/// equality is plain matrix equality.
struct Subspace {
  const LieAlgebra* ambient = nullptr;
  Matrix<Rat> basis;  // RREF, one basis vector per row

  static Subspace span(const LieAlgebra& L, const Matrix<Rat>& rows) {
    return Subspace{&L, row_space_basis(rows)};
  }

  static Subspace zero(const LieAlgebra& L) { return Subspace{&L, Matrix<Rat>(0, L.dim())}; }

  static Subspace full(const LieAlgebra& L) {
    return Subspace{&L, Matrix<Rat>::identity(L.dim())};
  }

  std::size_t dim() const { return basis.rows(); }
  bool is_zero() const { return basis.rows() == 0; }

  bool contains(const std::vector<Rat>& v) const { return in_row_space(basis, v); }

  bool contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.basis.rows(); ++r)
      if (!contains(other.basis.row(r))) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    return Subspace{ambient, row_space_basis(basis.vstack(other.basis))};
  }

  bool operator==(const Subspace& o) const { return basis == o.basis; }

  /// Reduces v against a row-echelon basis; true iff the remainder vanishes.
  static bool in_row_space(const Matrix<Rat>& rref, std::vector<Rat> v) {
    for (std::size_t r = 0; r < rref.rows(); ++r) {
      std::size_t p = 0;
      while (p < rref.cols() && rref(r, p) == 0) ++p;
      if (p == rref.cols()) continue;
      if (v[p] != 0) {
        Rat f = v[p] / rref(r, p);
        for (std::size_t k = p; k < rref.cols(); ++k) v[k] -= f * rref(r, k);
      }
    }
    return vec_is_zero(v);
  }
};

/// Symmetric bilinear form on the algebra (the Killing form in practice).
struct BilinearForm {
  Matrix<Rat> matrix;

  Rat eval(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    return dot(matrix.apply(y), x);
  }
};

/// K_{ij} = trace(ad_i ad_j). Symmetry and ad-invariance are rechecked on the
/// result before returning it.
inline BilinearForm killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix<Rat>> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
  Matrix<Rat> K(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) t += ads[i](r, s) * ads[j](s, r);
      K(i, j) = t;
      K(j, i) = t;
    }
  // K([e_i,e_j], e_k) + K(e_j, [e_i,e_k]) = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rat r = 0;
        for (std::size_t m = 0; m < n; ++m) r += L.c(i, j, m) * K(m, k) + L.c(i, k, m) * K(j, m);
        if (r != 0) throw Error("killing form failed ad-invariance recheck");
      }
  return BilinearForm{std::move(K)};
}

/// Cartan's criterion: det K != 0.
inline bool is_semisimple(const LieAlgebra& L) { return det(killing_form(L).matrix) != 0; }

/// Compact type iff the Killing form is negative definite (leading principal
/// minors of K alternate in sign starting negative).
inline bool is_compact_type(const LieAlgebra& L) {
  auto minors = leading_principal_minors(killing_form(L).matrix);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    int expected = (k % 2 == 0) ? -1 : 1;
    if (sign(minors[k]) != expected) return false;
  }
  return true;
}

/// Exact kernel of the stacked ad representation: {x : [x, e_j] = 0 for all j}.
inline Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix<Rat> stacked(n * n, n);
  for (const auto& e : L.nonzero()) stacked(e.j * n + e.k, e.i) = e.v;
  return Subspace{&L, row_space_basis(kernel_basis(stacked))};
}

/// Span of all pairwise brackets of basis vectors.
inline Subspace derived_algebra(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rat> v(n, Rat(0));
      for (std::size_t k = 0; k < n; ++k) v[k] = L.c(i, j, k);
      if (!vec_is_zero(v)) rows.push_back(std::move(v));
    }
  Matrix<Rat> m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return Subspace::span(L, m);
}

/// Least subalgebra containing S: iterated bracket closure. The rank strictly
/// increases every round, so at most dim rounds run.
inline Subspace lie_generate(const LieAlgebra& L, const Subspace& S) {
  Subspace v{&L, row_space_basis(S.basis)};
  while (true) {
    std::vector<std::vector<Rat>> new_rows;
    for (std::size_t a = 0; a < v.basis.rows(); ++a)
      for (std::size_t b = a + 1; b < v.basis.rows(); ++b) {
        auto w = L.bracket(v.basis.row(a), v.basis.row(b));
        if (!v.contains(w)) new_rows.push_back(std::move(w));
      }
    if (new_rows.empty()) return v;
    Matrix<Rat> extra(new_rows.size(), L.dim());
    for (std::size_t r = 0; r < new_rows.size(); ++r) extra.set_row(r, new_rows[r]);
    Subspace next{&L, row_space_basis(v.basis.vstack(extra))};
    if (next.dim() == v.dim()) return next;
    v = next;
  }
}

/// Smallest ideal of L containing S: closure under brackets with the whole
/// algebra.
inline Subspace ideal_generate(const LieAlgebra& L, const Subspace& S) {
  Subspace v{&L, row_space_basis(S.basis)};
  while (true) {
    std::vector<std::vector<Rat>> new_rows;
    for (std::size_t a = 0; a < v.basis.rows(); ++a)
      for (std::size_t i = 0; i < L.dim(); ++i) {
        auto w = L.bracket(L.basis_vector(i), v.basis.row(a));
        if (!v.contains(w)) new_rows.push_back(std::move(w));
      }
    if (new_rows.empty()) return v;
    Matrix<Rat> extra(new_rows.size(), L.dim());
    for (std::size_t r = 0; r < new_rows.size(); ++r) extra.set_row(r, new_rows[r]);
    v = Subspace{&L, row_space_basis(v.basis.vstack(extra))};
  }
}

/// Semisimple and no basis vector generates a proper ideal. A desk-scale
/// test: sound for the refusals it issues on block bases, not a full ideal
/// classification.
inline bool is_simple(const LieAlgebra& L) {
  if (L.dim() == 0 || !is_semisimple(L)) return false;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Matrix<Rat> one(1, L.dim());
    one(0, i) = 1;
    if (ideal_generate(L, Subspace::span(L, one)).dim() != L.dim()) return false;
  }
  return true;
}

// --- built-in algebras -----------------------------------------------------

/// [e_i, e_j] = sum_k eps_{ijk} e_k.
inline LieAlgebra builtin_su2() {
  std::vector<Rat> c(27, Rat(0));
  auto at = [&](int i, int j, int k) -> Rat& { return c[(i * 3 + j) * 3 + k]; };
  at(0, 1, 2) = 1;
  at(1, 0, 2) = -1;
  at(1, 2, 0) = 1;
  at(2, 1, 0) = -1;
  at(2, 0, 1) = 1;
  at(0, 2, 1) = -1;
  return new_lie_algebra(std::move(c), {"e1", "e2", "e3"});
}

inline LieAlgebra builtin_so3() {
  auto L = builtin_su2();
  std::vector<Rat> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) c.push_back(L.c(i, j, k));
  return new_lie_algebra(std::move(c), {"L1", "L2", "L3"});
}

inline LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
  const std::size_t n = A.dim() + B.dim();
  std::vector<Rat> c(n * n * n, Rat(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rat& {
    return c[(i * n + j) * n + k];
  };
  for (const auto& e : A.nonzero()) at(e.i, e.j, e.k) = e.v;
  for (const auto& e : B.nonzero()) at(A.dim() + e.i, A.dim() + e.j, A.dim() + e.k) = e.v;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return new_lie_algebra(std::move(c), std::move(labels));
}

inline LieAlgebra builtin_so4() { return direct_sum(builtin_su2(), builtin_su2()); }

/// Compact real form of sl(n) in the basis X_pq = E_pq - E_qp,
/// Y_pq = i(E_pq + E_qp), T_p = i(E_pp - E_{p+1,p+1}); all structure
/// constants come out rational. Computed by exact matrix commutators.
inline LieAlgebra builtin_su_n(std::size_t n) {
  if (n < 2) throw UnsupportedAlgebra("su(n) needs n >= 2");
  using GM = Matrix<GaussRat>;
  std::vector<GM> basis;
  std::vector<std::string> labels;
  auto unit = [&](std::size_t p, std::size_t q) {
    GM e(n, n);
    e(p, q) = GaussRat(1);
    return e;
  };
  const GaussRat I = GaussRat::i();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      basis.push_back(unit(p, q) - unit(q, p));
      labels.push_back("X" + std::to_string(p + 1) + std::to_string(q + 1));
      basis.push_back((unit(p, q) + unit(q, p)) * I);
      labels.push_back("Y" + std::to_string(p + 1) + std::to_string(q + 1));
    }
  for (std::size_t p = 0; p + 1 < n; ++p) {
    basis.push_back((unit(p, p) - unit(p + 1, p + 1)) * I);
    labels.push_back("T" + std::to_string(p + 1));
  }
  const std::size_t dim = basis.size();  // n^2 - 1

  // coordinates: solve for each commutator in the real span of the basis
  auto flatten = [&](const GM& m) {
    std::vector<Rat> v;
    v.reserve(2 * n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        v.push_back(m(r, s).re);
        v.push_back(m(r, s).im);
      }
    return v;
  };
  Matrix<Rat> span(2 * n * n, dim);
  for (std::size_t b = 0; b < dim; ++b) span.set_col(b, flatten(basis[b]));
  LinearSolver<Rat> solver(span);

  std::vector<Rat> c(dim * dim * dim, Rat(0));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (a == b) continue;
      auto out = solver.solve(flatten(commutator(basis[a], basis[b])));
      if (!out.feasible())
        throw UnsupportedAlgebra("su(n) commutator escaped the rational basis span");
      for (std::size_t k = 0; k < dim; ++k) c[(a * dim + b) * dim + k] = (*out.solution)[k];
    }
  return new_lie_algebra(std::move(c), std::move(labels));
}

/// Parses "su2", "so3", "so4", "suN" (N >= 2), or sums like "su2+su2".
inline LieAlgebra builtin(const std::string& name) {
  auto plus = name.find('+');
  if (plus != std::string::npos)
    return direct_sum(builtin(name.substr(0, plus)), builtin(name.substr(plus + 1)));
  if (name == "su2") return builtin_su2();
  if (name == "so3") return builtin_so3();
  if (name == "so4") return builtin_so4();
  if (name.size() > 2 && name.substr(0, 2) == "su") {
    char* end = nullptr;
    long n = std::strtol(name.c_str() + 2, &end, 10);
    if (end && *end == '\0' && n >= 2) return builtin_su_n(static_cast<std::size_t>(n));
  }
  throw UnsupportedAlgebra("unknown builtin algebra '" + name + "'");
}

}  // namespace nogo
