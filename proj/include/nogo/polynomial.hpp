#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nogo/rational.hpp"

namespace nogo {

/// Exponent vector of a monomial in x1..xn.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}

  std::size_t nvars() const { return e.size(); }

  long degree() const {
    long d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool is_constant() const { return degree() == 0; }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }

  /// Componentwise difference; caller guarantees divisibility.
  Monomial divided_by(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
};

/// Graded lexicographic order, x1 > x2 > ... breaking degree ties.
inline int graded_lex_cmp(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_cmp(a, b) > 0;
  }
};
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_cmp(a, b) < 0;
  }
};

/// Sparse multivariate polynomial over Q in coordinates x1..xn. Terms are
/// kept in descending graded-lex order and zero coefficients are never
/// stored, so representation is canonical.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, GradedLexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  /// x_{i+1} (zero-based index).
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Monomial m(nvars);
    m.e[i] = 1;
    p.add_term(m, Rat(1));
    return p;
  }

  static Polynomial from_monomial(const Monomial& m, const Rat& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  long degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Rat coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat constant_term() const { return coeff(Monomial(nvars_)); }

  void add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial operator*(const Rat& s) const {
    Polynomial r(nvars_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  /// this * (c * m), one pass.
  Polynomial times_monomial(const Monomial& m, const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [mt, ct] : terms_) r.terms_.emplace(mt * m, ct * c);
    return r;
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Monomial d = m;
      d.e[var] -= 1;
      r.add_term(d, c * Rat(static_cast<long>(m.e[var])));
    }
    return r;
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// --- sparse text format: terms `p/q x1^a x2^b` joined by " + " -------------

inline std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(i + 1);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    if (!m.is_constant()) s += " " + to_string(m);
  }
  return s;
}

inline Monomial parse_monomial(std::size_t nvars, const std::string& text) {
  Monomial m(nvars);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 'x') throw InputError("bad monomial token '" + tok + "'");
    auto caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    unsigned long var = std::stoul(idx);
    if (var < 1 || var > nvars) throw InputError("variable index out of range in '" + tok + "'");
    unsigned long exp = 1;
    if (caret != std::string::npos) exp = std::stoul(tok.substr(caret + 1));
    m.e[var - 1] += static_cast<std::uint32_t>(exp);
  }
  return m;
}

/// term := rational? (xN(^k)?)* ; at least a coefficient or one variable.
inline Polynomial parse_polynomial(std::size_t nvars, const std::string& text) {
  Polynomial p(nvars);
  std::string term;
  std::istringstream in(text);
  auto flush = [&](const std::string& t) {
    std::istringstream ts(t);
    std::string tok;
    Rat coeff(1);
    Monomial m(nvars);
    bool saw_any = false, saw_coeff = false;
    while (ts >> tok) {
      saw_any = true;
      if (tok[0] == 'x') {
        Monomial f = parse_monomial(nvars, tok);
        m = m * f;
      } else {
        if (saw_coeff) throw InputError("two coefficients in term '" + t + "'");
        coeff = parse_rat(tok);
        saw_coeff = true;
      }
    }
    if (!saw_any) throw InputError("empty term in polynomial text");
    p.add_term(m, coeff);
  };
  std::size_t start = 0;
  while (true) {
    std::size_t plus = text.find(" + ", start);
    if (plus == std::string::npos) {
      flush(text.substr(start));
      break;
    }
    flush(text.substr(start, plus - start));
    start = plus + 3;
  }
  return p;
}

}  // namespace nogo
