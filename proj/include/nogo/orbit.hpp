#pragma once

#include <vector>

#include "nogo/lie_algebra.hpp"
#include "nogo/linalg.hpp"

namespace nogo {

/// Base point of an adjoint orbit, coordinates in the structure basis. The
/// algebra is identified with its dual through the invariant form, so the
/// same data names a coadjoint orbit.
struct OrbitPoint {
  const LieAlgebra* algebra = nullptr;
  std::vector<Rat> h;

  bool is_zero() const { return vec_is_zero(h); }
};

/// Kernel/image splitting of ad_h. Both invariants (directness and the
/// bracket containment [ker, im] in im) are verified exactly at construction
/// and reported as flags.
struct IsotropyDecomposition {
  Subspace isotropy;  // ker ad_h
  Subspace tangent;   // im ad_h
  bool direct = false;
  bool bracket_containment = false;
};

inline IsotropyDecomposition isotropy_decomposition(const OrbitPoint& p) {
  const LieAlgebra& L = *p.algebra;
  Matrix<Rat> ad_h = L.ad(p.h);
  IsotropyDecomposition d;
  d.isotropy = Subspace{&L, kernel_basis(ad_h)};
  d.isotropy.basis = row_space_basis(d.isotropy.basis);
  d.tangent = Subspace{&L, column_space_basis(ad_h)};
  d.direct = d.isotropy.dim() + d.tangent.dim() == L.dim() &&
             row_spaces_independent(d.isotropy.basis, d.tangent.basis);
  if (!d.direct)
    throw DecompositionFailure("isotropy and tangent intersect nontrivially (input not compact type?)");
  d.bracket_containment = true;
  for (std::size_t a = 0; a < d.isotropy.dim() && d.bracket_containment; ++a)
    for (std::size_t b = 0; b < d.tangent.dim(); ++b) {
      auto w = L.bracket(d.isotropy.basis.row(a), d.tangent.basis.row(b));
      if (!d.tangent.contains(w)) {
        d.bracket_containment = false;
        break;
      }
    }
  return d;
}

/// rank(ad_h) = dim of the orbit through h. Evenness is asserted for
/// compact-type input (skew symmetry w.r.t. the definite invariant form).
inline std::size_t orbit_dimension(const OrbitPoint& p) {
  std::size_t r = rank(p.algebra->ad(p.h));
  if (r % 2 == 1 && is_compact_type(*p.algebra))
    throw Error("odd ad_h rank on compact-type input; structure constants corrupt");
  return r;
}

/// Regularity report: rank maximality is probed over a deterministic set of
/// rational perturbations of h (sound refutations, not a completeness
/// proof); the abelian-isotropy test is exact.
struct RegularityReport {
  std::size_t orbit_dim = 0;
  std::size_t max_probed_dim = 0;
  bool rank_maximal = false;
  bool isotropy_abelian = false;
  bool regular = false;
};

inline RegularityReport is_regular(const OrbitPoint& p) {
  const LieAlgebra& L = *p.algebra;
  RegularityReport rep;
  rep.orbit_dim = rank(L.ad(p.h));
  rep.max_probed_dim = rep.orbit_dim;
  static const Rat steps[] = {Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 3)};
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const Rat& eps : steps) {
      std::vector<Rat> probe = p.h;
      probe[i] += eps;
      rep.max_probed_dim = std::max(rep.max_probed_dim, rank(L.ad(probe)));
    }
  rep.rank_maximal = rep.orbit_dim == rep.max_probed_dim && rep.orbit_dim > 0;

  Matrix<Rat> iso = kernel_basis(L.ad(p.h));
  rep.isotropy_abelian = true;
  for (std::size_t a = 0; a < iso.rows() && rep.isotropy_abelian; ++a)
    for (std::size_t b = a + 1; b < iso.rows(); ++b)
      if (!vec_is_zero(L.bracket(iso.row(a), iso.row(b)))) {
        rep.isotropy_abelian = false;
        break;
      }
  rep.regular = rep.rank_maximal && rep.isotropy_abelian;
  return rep;
}

/// Witness that the tangent space [b, h] generates the whole algebra:
/// the chain of closures with strictly increasing rank, ending at dim b.
struct MinimalityChain {
  std::vector<Rat> h;
  std::vector<Matrix<Rat>> chain;  // RREF bases, first = im ad_h, last = full
  bool generates = false;
};

inline MinimalityChain minimality_witness_chain(const OrbitPoint& p) {
  const LieAlgebra& L = *p.algebra;
  if (p.is_zero()) throw ZeroPoint();
  if (!is_simple(L))
    throw NotSimple("minimality argument needs a simple algebra; refusing composite input");
  MinimalityChain w;
  w.h = p.h;
  // one bracket-closure step per chain entry, so the witness is stepwise checkable
  Subspace v{&L, column_space_basis(L.ad(p.h))};
  w.chain.push_back(v.basis);
  while (v.dim() < L.dim()) {
    std::vector<std::vector<Rat>> rows;
    for (std::size_t a = 0; a < v.basis.rows(); ++a)
      for (std::size_t b = a + 1; b < v.basis.rows(); ++b)
        rows.push_back(L.bracket(v.basis.row(a), v.basis.row(b)));
    Matrix<Rat> extra(rows.size(), L.dim());
    for (std::size_t r = 0; r < rows.size(); ++r) extra.set_row(r, rows[r]);
    Subspace next{&L, row_space_basis(v.basis.vstack(extra))};
    if (next.dim() == v.dim()) break;  // closed without reaching the whole algebra
    v = next;
    w.chain.push_back(v.basis);
  }
  w.generates = v.dim() == L.dim();
  return w;
}

}  // namespace nogo
