#pragma once

#include <utility>
#include <vector>

#include "kvn/algebra/complex_rational.hpp"

namespace kvn::algebra {

// Polynomial in hbar with exact complex-rational coefficients. Terms are kept
// sorted by power and never hold a zero coefficient.
class HbarCoefficient {
 public:
  using Term = std::pair<int, ComplexRational>;

  HbarCoefficient() = default;
  HbarCoefficient(ComplexRational c, int power = 0);  // NOLINT
  HbarCoefficient(int c) : HbarCoefficient(ComplexRational(c)) {}  // NOLINT

  static HbarCoefficient hbar(int power = 1) { return {ComplexRational(1), power}; }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero coefficient.
  int max_power() const { return terms_.empty() ? -1 : terms_.back().first; }
  int min_power() const { return terms_.empty() ? -1 : terms_.front().first; }
  ComplexRational at(int power) const;

  HbarCoefficient conj() const;
  HbarCoefficient component(int power) const;
  HbarCoefficient truncated(int max_power) const;
  // Multiply by hbar^delta. A negative delta requires every stored power to
  // stay non-negative; otherwise ContractError.
  HbarCoefficient shifted(int delta) const;
  ComplexRational evaluate(const Rational& hbar) const;

  HbarCoefficient& operator+=(const HbarCoefficient& o);
  HbarCoefficient& operator-=(const HbarCoefficient& o);
  HbarCoefficient& operator*=(const ComplexRational& c);

  friend HbarCoefficient operator+(HbarCoefficient a, const HbarCoefficient& b) { return a += b; }
  friend HbarCoefficient operator-(HbarCoefficient a, const HbarCoefficient& b) { return a -= b; }
  friend HbarCoefficient operator*(const HbarCoefficient& a, const HbarCoefficient& b);
  friend HbarCoefficient operator*(HbarCoefficient a, const ComplexRational& c) { return a *= c; }
  friend HbarCoefficient operator-(const HbarCoefficient& a);
  friend bool operator==(const HbarCoefficient& a, const HbarCoefficient& b) {
    return a.terms_ == b.terms_;
  }

 private:
  // Adds c*hbar^power, merging and dropping zeros.
  void accumulate(int power, const ComplexRational& c);

  std::vector<Term> terms_;
};

}  // namespace kvn::algebra
