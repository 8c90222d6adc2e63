#pragma once

#include <string>

#include "nogo/rational.hpp"

namespace nogo {

/// Element of Q(i). Keeps the spin-matrix and ansatz arithmetic exact; the
/// field structure is all the linear algebra templates need.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(int x) : re(x), im(0) {}  // NOLINT: implicit by design, mirrors Rat(int)
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat conj() const { return GaussRat(re, -im); }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw Error("division by zero in Q(i)");
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  bool is_zero() const { return re == 0 && im == 0; }
};

/// "a+bi" with both parts canonical rationals; pure parts collapse to "a" / "bi".
inline std::string to_string(const GaussRat& z) {
  if (z.im == 0) return to_string(z.re);
  std::string i_part = to_string(z.im) + "i";
  if (z.re == 0) return i_part;
  return to_string(z.re) + (sign(z.im) < 0 ? "" : "+") + i_part;
}

inline GaussRat parse_gauss(const std::string& s) {
  if (s.empty()) throw InputError("empty Gaussian rational literal");
  if (s.back() != 'i') return GaussRat(parse_rat(s));
  // split "a+bi" / "a-bi" / "bi" at the last +/- that is not leading
  std::string body = s.substr(0, s.size() - 1);
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != '/') {
      std::string re = body.substr(0, p);
      std::string im = body.substr(body[p] == '+' ? p + 1 : p);
      if (im.empty() || im == "-" || im == "+") im += "1";
      return GaussRat(parse_rat(re), parse_rat(im));
    }
  }
  if (body.empty() || body == "-" || body == "+") body += "1";
  return GaussRat(Rat(0), parse_rat(body));
}

}  // namespace nogo
