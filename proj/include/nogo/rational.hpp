#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>

#include "nogo/error.hpp"

namespace nogo {

/// Exact rational scalar. All arithmetic in the library is over this type
/// (or its Gaussian extension); nothing is ever rounded.
using Rat = mpq_class;

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" (base 10). Canonicalizes to lowest terms.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline int sign(const Rat& q) { return sgn(q); }

/// (n)!! with the convention (-1)!! = 0!! = 1.
inline mpz_class double_factorial(long n) {
  mpz_class r = 1;
  for (long k = n; k >= 2; k -= 2) r *= k;
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

/// Deterministic stream of small rationals for property-style sampling.
/// Fixed-seed mt19937_64 keeps every run (and platform) bit-identical.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform numerator in [-bound, bound], denominator in [1, den_bound].
  Rat next(long bound = 9, long den_bound = 4) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    Rat q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  std::uint64_t next_index(std::uint64_t n) {
    std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
    return d(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

/// Basis-size cap honored by space constructors; NOGO_MAX_DIM overrides.
inline std::size_t max_basis_dim() {
  if (const char* v = std::getenv("NOGO_MAX_DIM")) {
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return 100;
}

}  // namespace nogo
