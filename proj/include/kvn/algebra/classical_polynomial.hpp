#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>

#include "kvn/algebra/complex_rational.hpp"
#include "kvn/algebra/monomial.hpp"
#include "kvn/algebra/operator_polynomial.hpp"

namespace kvn::algebra {

// q_0..q_{n-1} in slots [0, kMaxDof), p_0..p_{n-1} in [kMaxDof, 2 kMaxDof).
class ClassicalMonomial {
 public:
  using Exponents = std::array<std::uint8_t, 2 * kMaxDof>;

  ClassicalMonomial() = default;
  static ClassicalMonomial of(PhaseIndex idx, int power = 1);

  int exponent(PhaseIndex idx) const { return e_[slot(idx)]; }
  void set_exponent(PhaseIndex idx, int power);
  int degree() const;
  int max_dof() const;
  const Exponents& exponents() const { return e_; }
  // Same exponents on the phi symbols of an operator monomial.
  Monomial to_operator_monomial() const;

  friend ClassicalMonomial operator*(const ClassicalMonomial& a, const ClassicalMonomial& b);
  friend auto operator<=>(const ClassicalMonomial&, const ClassicalMonomial&) = default;
  friend bool operator==(const ClassicalMonomial&, const ClassicalMonomial&) = default;

  static int slot(PhaseIndex idx);

 private:
  Exponents e_{};
};

// Commutative polynomial f(q, p) with rational coefficients.
class ClassicalPolynomial {
 public:
  using Terms = std::map<ClassicalMonomial, Rational>;

  explicit ClassicalPolynomial(int ndof = 1);

  static ClassicalPolynomial constant(int ndof, const Rational& c);
  static ClassicalPolynomial variable(int ndof, PhaseIndex idx);
  static ClassicalPolynomial q(int ndof = 1, int j = 0) { return variable(ndof, PhaseIndex::q(j)); }
  static ClassicalPolynomial p(int ndof = 1, int j = 0) { return variable(ndof, PhaseIndex::p(j)); }

  int ndof() const { return ndof_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rational coefficient(const ClassicalMonomial& m) const;

  void add_term(const ClassicalMonomial& m, const Rational& c);

  ClassicalPolynomial derivative(PhaseIndex idx) const;
  ClassicalPolynomial pow(int n) const;

  double evaluate(std::span<const double> q, std::span<const double> p) const;
  double evaluate(double q, double p) const;

  // f(q_hat, p_hat): the multiplicative KvN operator of the classical observable.
  OperatorPolynomial to_operator() const;

  ClassicalPolynomial& operator+=(const ClassicalPolynomial& o);
  ClassicalPolynomial& operator-=(const ClassicalPolynomial& o);
  ClassicalPolynomial& operator*=(const Rational& c);

  friend ClassicalPolynomial operator+(ClassicalPolynomial a, const ClassicalPolynomial& b) { return a += b; }
  friend ClassicalPolynomial operator-(ClassicalPolynomial a, const ClassicalPolynomial& b) { return a -= b; }
  friend ClassicalPolynomial operator-(const ClassicalPolynomial& a);
  friend ClassicalPolynomial operator*(const ClassicalPolynomial& a, const ClassicalPolynomial& b);
  friend ClassicalPolynomial operator*(ClassicalPolynomial a, const Rational& c) { return a *= c; }
  friend ClassicalPolynomial operator*(const Rational& c, ClassicalPolynomial a) { return a *= c; }
  friend bool operator==(const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
    return a.ndof_ == b.ndof_ && a.terms_ == b.terms_;
  }

 private:
  int ndof_;
  Terms terms_;
};

// {f, g} = sum_j (df/dq_j dg/dp_j - df/dp_j dg/dq_j).
ClassicalPolynomial poisson_bracket(const ClassicalPolynomial& f, const ClassicalPolynomial& g);

}  // namespace kvn::algebra
