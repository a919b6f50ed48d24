#pragma once

#include <vector>

#include "kvn/algebra/classical_polynomial.hpp"

namespace kvn::phase_space {

inline constexpr int kMaxPotentialDegree = 8;

// H(q, p) = p^2 / 2m + V(q), one degree of freedom.
class HamiltonianSpec {
 public:
  // ContractError for a non-positive or non-finite mass or ndof != 1;
  // UnsupportedInputError if V depends on p or has degree above 8.
  explicit HamiltonianSpec(algebra::ClassicalPolynomial potential, double mass = 1.0);

  // V = m omega^2 q^2 / 2.
  static HamiltonianSpec harmonic(double omega, double mass = 1.0);

  double mass() const { return mass_; }
  const algebra::ClassicalPolynomial& potential() const { return potential_; }
  int potential_degree() const { return static_cast<int>(v_.size()) - 1; }
  // p^2/2m + V with the mass converted exactly from its double value.
  algebra::ClassicalPolynomial classical() const;

  double V(double q) const;
  double dV(double q) const;
  double energy(double q, double p) const { return p * p / (2 * mass_) + V(q); }

 private:
  algebra::ClassicalPolynomial potential_;
  double mass_;
  std::vector<double> v_;   // monomial coefficients of V
  std::vector<double> dv_;  // of V'
};

}  // namespace kvn::phase_space
