#pragma once

#include <array>

#include "nogo/gaussian_rational.hpp"
#include "nogo/matrix.hpp"

namespace nogo {

/// Irreducible spin-j images of the coordinate functions, normalized so the
/// bracket-to-commutator condition carries no extra scalar:
/// [Q(x_a), Q(x_b)] = eps_{abc} Q(x_c), matching {x_a, x_b} = eps_{abc} x_c.
///
/// Built on the monomial model u^{2j-s} v^s (s = 0..2j): the raising,
/// lowering and weight operators E, F, H there have integer entries, and
/// Q(x_1) = (E-F)/2, Q(x_2) = -i(E+F)/2, Q(x_3) = -iH/2 all land in Q(i).
/// Doubling clears every denominator, so 2*Q(x_a) is a Gaussian-integer
/// matrix (the "scale 2" recorded in certificates).
struct SpinMatrices {
  Rat j;
  std::size_t size = 0;  // N = 2j + 1
  std::array<Matrix<GaussRat>, 3> q;
};

inline SpinMatrices spin_generators(const Rat& j) {
  Rat twoj = j * 2;
  if (j < 0 || twoj.get_den() != 1)
    throw InputError("spin must be a nonnegative half-integer, got " + to_string(j));
  const std::size_t two_j = static_cast<std::size_t>(twoj.get_num().get_ui());
  const std::size_t n = two_j + 1;
  Matrix<GaussRat> e(n, n), f(n, n), h(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (s >= 1) e(s - 1, s) = GaussRat(Rat(static_cast<long>(s)));
    if (s + 1 < n) f(s + 1, s) = GaussRat(Rat(static_cast<long>(two_j - s)));
    h(s, s) = GaussRat(Rat(static_cast<long>(two_j) - 2 * static_cast<long>(s)));
  }
  const GaussRat half(Rat(1, 2));
  const GaussRat minus_i_half(Rat(0), Rat(-1, 2));
  SpinMatrices sm;
  sm.j = j;
  sm.size = n;
  sm.q[0] = (e - f) * half;
  sm.q[1] = (e + f) * minus_i_half;
  sm.q[2] = h * minus_i_half;
  // bracket relations must close exactly: [q_a, q_b] = eps_{abc} q_c
  for (int a = 0; a < 3; ++a) {
    int b = (a + 1) % 3, c = (a + 2) % 3;
    if (!(commutator(sm.q[a], sm.q[b]) - sm.q[c]).is_zero())
      throw Error("spin generator commutation relations failed");
  }
  return sm;
}

/// Parses "1/2", "3/2", "1" etc.
inline Rat parse_spin(const std::string& s) {
  Rat j = parse_rat(s);
  if (j < 0 || Rat(j * 2).get_den() != 1)
    throw InputError("spin must be a nonnegative half-integer, got '" + s + "'");
  return j;
}

}  // namespace nogo
