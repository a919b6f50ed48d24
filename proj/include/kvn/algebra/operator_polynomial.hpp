#pragma once

#include <map>

#include "kvn/algebra/hbar_coefficient.hpp"
#include "kvn/algebra/monomial.hpp"

namespace kvn::algebra {

// Element of the algebra generated by q_j, p_j, lambda_qj, lambda_pj with
// [phi^a, lambda_b] = i delta^a_b and every other basic commutator zero.
// Stored as a map from normal-ordered monomials to hbar-graded coefficients.
//
// Values are immutable in practice: every operation returns a fresh
// polynomial, so instances may be shared across threads.
class OperatorPolynomial {
 public:
  using Terms = std::map<Monomial, HbarCoefficient>;

  explicit OperatorPolynomial(int ndof = 1);

  static OperatorPolynomial constant(int ndof, const HbarCoefficient& c);
  static OperatorPolynomial identity(int ndof) { return constant(ndof, HbarCoefficient(1)); }
  static OperatorPolynomial symbol(int ndof, PhaseIndex idx);
  static OperatorPolynomial term(int ndof, const Monomial& m, const HbarCoefficient& c);

  int ndof() const { return ndof_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree in the KvN symbols; -1 for the zero polynomial.
  int degree() const;
  // Largest power of hbar present; -1 for the zero polynomial.
  int max_hbar_power() const;
  HbarCoefficient coefficient(const Monomial& m) const;

  OperatorPolynomial hbar_component(int power) const;
  OperatorPolynomial truncated(int max_hbar_power) const;

  // Adds c * m, where m is already in normal order.
  void add_term(const Monomial& m, const HbarCoefficient& c);

  OperatorPolynomial& operator+=(const OperatorPolynomial& o);
  OperatorPolynomial& operator-=(const OperatorPolynomial& o);

  friend OperatorPolynomial operator+(OperatorPolynomial a, const OperatorPolynomial& b) { return a += b; }
  friend OperatorPolynomial operator-(OperatorPolynomial a, const OperatorPolynomial& b) { return a -= b; }
  friend OperatorPolynomial operator-(const OperatorPolynomial& a);
  friend OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b);
  friend bool operator==(const OperatorPolynomial& a, const OperatorPolynomial& b) {
    return a.ndof_ == b.ndof_ && a.terms_ == b.terms_;
  }

 private:
  int ndof_;
  Terms terms_;
};

// Normal-ordered expansion of the word a*b. Each commuting pair (x, lambda_x)
// contributes lambda_x^m x^n = sum_k C(m,k) n!/(n-k)! (-i)^k x^(n-k) lambda_x^(m-k).
// Throws ContractError if either monomial references a dof >= ndof, and
// DegreeOverflowError if deg(a)+deg(b) exceeds degree_cap.
OperatorPolynomial normal_order_product(const Monomial& a, const Monomial& b, int ndof,
                                        int degree_cap = kDefaultDegreeCap);

OperatorPolynomial multiply(const OperatorPolynomial& a, const OperatorPolynomial& b,
                            int degree_cap = kDefaultDegreeCap);
OperatorPolynomial scale(const OperatorPolynomial& a, const HbarCoefficient& c);
OperatorPolynomial hermitian_conjugate(const OperatorPolynomial& a);
OperatorPolynomial commutator(const OperatorPolynomial& a, const OperatorPolynomial& b,
                              int degree_cap = kDefaultDegreeCap);

// Evaluates every hbar polynomial at the given value; 0 gives the classical limit.
OperatorPolynomial substitute_hbar(const OperatorPolynomial& a, const Rational& value);

// Exact division by hbar: requires the hbar^0 component to vanish.
OperatorPolynomial divide_by_hbar(const OperatorPolynomial& a);

bool is_hermitian(const OperatorPolynomial& a);

}  // namespace kvn::algebra
