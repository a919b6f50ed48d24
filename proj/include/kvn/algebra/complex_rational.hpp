#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace kvn::algebra {

using Rational = mpq_class;

// Canonicalized num/den.
Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

// Exact complex number re + im*i.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  // Inputs are canonicalized, so 3/3 and 1 compare equal.
  ComplexRational(Rational real) : re(std::move(real)), im(0) { re.canonicalize(); }  // NOLINT
  ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {
    re.canonicalize();
    im.canonicalize();
  }
  ComplexRational(long real) : re(real), im(0) {}  // NOLINT
  ComplexRational(int real) : re(real), im(0) {}   // NOLINT

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  ComplexRational conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// (-i)^k
ComplexRational minus_i_power(int k);

std::string to_string(const ComplexRational& c);

}  // namespace kvn::algebra
