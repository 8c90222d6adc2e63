#pragma once

#include <optional>
#include <vector>

#include "nogo/matrix.hpp"

namespace nogo {

/// Gauss-Jordan reduction with the row transform recorded: transform * input = rref.
/// Pivoting picks the first row with a nonzero entry, so output is deterministic.
template <class F>
struct RowReduction {
  Matrix<F> rref;
  Matrix<F> transform;  // invertible, rows x rows
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

template <class F>
RowReduction<F> row_reduce(const Matrix<F>& in) {
  RowReduction<F> out;
  out.rref = in;
  out.transform = Matrix<F>::identity(in.rows());
  Matrix<F>& R = out.rref;
  Matrix<F>& T = out.transform;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < in.cols() && lead < in.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < in.rows() && R(piv, c) == F(0)) ++piv;
    if (piv == in.rows()) continue;
    R.swap_rows(lead, piv);
    T.swap_rows(lead, piv);
    const F inv = F(1) / R(lead, c);
    for (std::size_t k = 0; k < in.cols(); ++k) R(lead, k) = R(lead, k) * inv;
    for (std::size_t k = 0; k < in.rows(); ++k) T(lead, k) = T(lead, k) * inv;
    for (std::size_t r = 0; r < in.rows(); ++r) {
      if (r == lead || R(r, c) == F(0)) continue;
      const F f = R(r, c);
      for (std::size_t k = 0; k < in.cols(); ++k) R(r, k) -= f * R(lead, k);
      for (std::size_t k = 0; k < in.rows(); ++k) T(r, k) -= f * T(lead, k);
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  out.rank = out.pivot_cols.size();
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank;
}

/// Canonical basis of the (right) null space, one row per basis vector.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  RowReduction<F> rr = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  Matrix<F> K(n - rr.rank, n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    K(row, f) = F(1);
    for (std::size_t i = 0; i < rr.rank; ++i) K(row, rr.pivot_cols[i]) = -rr.rref(i, f);
    ++row;
  }
  return K;
}

/// RREF basis of the row space (nonzero rows only).
template <class F>
Matrix<F> row_space_basis(const Matrix<F>& m) {
  RowReduction<F> rr = row_reduce(m);
  return rr.rref.submatrix(0, 0, rr.rank, m.cols());
}

/// RREF basis of the column space, returned as rows.
template <class F>
Matrix<F> column_space_basis(const Matrix<F>& m) {
  return row_space_basis(m.transpose());
}

/// Basis of {y : y^T m = 0}, one row per vector.
template <class F>
Matrix<F> left_kernel_basis(const Matrix<F>& m) {
  return kernel_basis(m.transpose());
}

/// Outcome of an exact linear solve. Exactly one of solution/dual is set:
/// dual is a row vector y with y^T A = 0 and y^T b != 0 (infeasibility witness).
template <class F>
struct SolveOutcome {
  std::optional<std::vector<F>> solution;
  std::optional<std::vector<F>> dual;
  bool feasible() const { return solution.has_value(); }
};

/// Factored solver for repeated right-hand sides against a fixed matrix.
template <class F>
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix<F>& a) : a_(a), rr_(row_reduce(a)) {}

  const RowReduction<F>& reduction() const { return rr_; }
  std::size_t rank() const { return rr_.rank; }

  SolveOutcome<F> solve(const std::vector<F>& b) const {
    SolveOutcome<F> out;
    std::vector<F> y = rr_.transform.apply(b);
    for (std::size_t r = rr_.rank; r < a_.rows(); ++r) {
      if (!(y[r] == F(0))) {
        out.dual = rr_.transform.row(r);
        return out;
      }
    }
    std::vector<F> x(a_.cols(), F(0));
    for (std::size_t i = 0; i < rr_.rank; ++i) x[rr_.pivot_cols[i]] = y[i];
    out.solution = std::move(x);
    return out;
  }

 private:
  Matrix<F> a_;
  RowReduction<F> rr_;
};

template <class F>
SolveOutcome<F> solve(const Matrix<F>& a, const std::vector<F>& b) {
  return LinearSolver<F>(a).solve(b);
}

/// Exact determinant by forward elimination with row swaps.
template <class F>
F det(const Matrix<F>& in) {
  if (in.rows() != in.cols()) throw Error("det: matrix not square");
  const std::size_t n = in.rows();
  Matrix<F> a = in;
  F d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == F(0)) ++piv;
    if (piv == n) return F(0);
    if (piv != c) {
      a.swap_rows(piv, c);
      d = -d;
    }
    d *= a(c, c);
    const F inv = F(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == F(0)) continue;
      const F f = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

/// det of the leading principal k x k blocks, k = 1..n.
template <class F>
std::vector<F> leading_principal_minors(const Matrix<F>& m) {
  std::vector<F> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) minors.push_back(det(m.submatrix(0, 0, k, k)));
  return minors;
}

// --- dense univariate polynomials (ascending coefficients) ----------------

template <class F>
using UniPoly = std::vector<F>;

template <class F>
UniPoly<F> poly_add(const UniPoly<F>& a, const UniPoly<F>& b) {
  UniPoly<F> r(std::max(a.size(), b.size()), F(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

template <class F>
UniPoly<F> poly_scale(const UniPoly<F>& a, const F& s) {
  UniPoly<F> r = a;
  for (auto& x : r) x *= s;
  return r;
}

/// a(x) * (x - c)
template <class F>
UniPoly<F> poly_mul_linear(const UniPoly<F>& a, const F& c) {
  UniPoly<F> r(a.size() + 1, F(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i + 1] += a[i];
    r[i] -= c * a[i];
  }
  return r;
}

template <class F>
F poly_eval(const UniPoly<F>& a, const F& x) {
  F r(0);
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

/// Synthetic division by (x - r); returns quotient iff the remainder is zero.
template <class F>
std::optional<UniPoly<F>> poly_divide_linear(const UniPoly<F>& a, const F& r) {
  if (a.empty()) return std::nullopt;
  UniPoly<F> q(a.size() - 1, F(0));
  F carry(0);
  for (std::size_t i = a.size(); i-- > 1;) {
    carry = a[i] + carry * r;
    q[i - 1] = carry;
  }
  F rem = a[0] + carry * r;
  if (!(rem == F(0))) return std::nullopt;
  return q;
}

/// Multiplicity of r as a root (repeated exact division).
template <class F>
std::size_t root_multiplicity(UniPoly<F> p, const F& r) {
  std::size_t m = 0;
  while (p.size() > 1) {
    auto q = poly_divide_linear(p, r);
    if (!q) break;
    p = *q;
    ++m;
  }
  return m;
}

/// Characteristic polynomial det(xI - A), monic, ascending coefficients.
/// Similarity reduction to Hessenberg form, then the last-column expansion
/// recurrence on leading blocks.
template <class F>
UniPoly<F> char_poly(const Matrix<F>& in) {
  if (in.rows() != in.cols()) throw Error("char_poly: matrix not square");
  const std::size_t n = in.rows();
  if (n == 0) return UniPoly<F>{F(1)};
  Matrix<F> h = in;
  // reduce to upper Hessenberg by similarity (row op + matching column op)
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h(piv, c) == F(0)) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      h.swap_rows(piv, c + 1);
      h.swap_cols(piv, c + 1);
    }
    const F inv = F(1) / h(c + 1, c);
    for (std::size_t r = c + 2; r < n; ++r) {
      if (h(r, c) == F(0)) continue;
      const F f = h(r, c) * inv;
      for (std::size_t k = 0; k < n; ++k) h(r, k) -= f * h(c + 1, k);
      for (std::size_t k = 0; k < n; ++k) h(k, c + 1) += f * h(k, r);
    }
  }
  std::vector<UniPoly<F>> p(n + 1);
  p[0] = UniPoly<F>{F(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = poly_mul_linear(p[k - 1], h(k - 1, k - 1));
    F sub(1);  // product of subdiagonal entries h(t, t-1), t = k-m+1 .. k-1
    for (std::size_t m = 2; m <= k; ++m) {
      sub *= h(k - m + 1, k - m);
      if (sub == F(0)) break;
      const F coeff = h(k - m, k - 1) * sub;
      if (coeff == F(0)) continue;
      const F negated = F(0) - coeff;
      p[k] = poly_add(p[k], poly_scale(p[k - m], negated));
    }
  }
  return p[n];
}

/// rank(A) + rank(B) == rank([A;B]) iff the row spaces intersect trivially.
template <class F>
bool row_spaces_independent(const Matrix<F>& a, const Matrix<F>& b) {
  return rank(a) + rank(b) == rank(a.vstack(b));
}

}  // namespace nogo
