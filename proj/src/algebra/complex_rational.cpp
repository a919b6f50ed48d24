#include "kvn/algebra/complex_rational.hpp"

#include "kvn/errors.hpp"

namespace kvn::algebra {

Rational make_rational(long num, long den) {
  if (den == 0) throw ContractError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

ComplexRational minus_i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(-1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(1)};
  }
}

std::string to_string(const ComplexRational& c) {
  if (sgn(c.im) == 0) return c.re.get_str();
  if (sgn(c.re) == 0) return c.im.get_str() + "*i";
  return "(" + c.re.get_str() + (sgn(c.im) > 0 ? "+" : "") + c.im.get_str() + "*i)";
}

}  // namespace kvn::algebra
