#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

namespace primcone {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::domain_error("to_int: non-integral rational");
  return numerator(q);
}

inline long to_long(const Rat& q) { return static_cast<long>(to_int(q)); }

inline std::string to_string(const Rat& q) { return q.str(); }

/// Gaussian rational a + b*i, the coefficient field used by the Jordan
/// algebra module (the structures there are complex; every computation
/// needs only rational real and imaginary parts).
struct GaussRat {
  Rat re, im;
  GaussRat() : re(0), im(0) {}
  GaussRat(int x) : re(x), im(0) {}
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { a += b; return a; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { a -= b; return a; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussRat& operator/=(const GaussRat& o) { *this = *this / o; return *this; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::string str() const {
    if (im == 0) return re.str();
    return re.str() + (im > 0 ? "+" : "") + im.str() + "i";
  }
};

inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const GaussRat& x) { return x.is_zero(); }

}  // namespace primcone
