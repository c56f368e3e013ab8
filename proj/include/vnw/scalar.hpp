#pragma once

#include <string>
#include <utility>

#include "vnw/rational.hpp"

namespace vnw {

/// Exact Gaussian rational re + im·i. Real algebras restrict to im = 0.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(Rational r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  Scalar(long n) : re(n), im(0) {}                 // NOLINT
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }
  /// |z|^2 as a rational; positive for z != 0.
  Rational norm() const { return re * re + im * im; }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("division by zero Scalar");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// "p/q" for real values, "p/q+r/s i" otherwise.
inline std::string to_string(const Scalar& s) {
  if (s.im == 0) return s.re.get_str();
  std::string out = s.re.get_str();
  if (s.im < 0) {
    out += "-";
    out += Rational(-s.im).get_str();
  } else {
    out += "+";
    out += s.im.get_str();
  }
  out += " i";
  return out;
}

inline Scalar scalar_pow(const Scalar& base, long exp) {
  if (exp < 0) return Scalar(1) / scalar_pow(base, -exp);
  Scalar acc(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace vnw
