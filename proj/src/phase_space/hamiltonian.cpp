#include "kvn/phase_space/hamiltonian.hpp"

#include <cmath>

#include "kvn/errors.hpp"

namespace kvn::phase_space {

using algebra::ClassicalPolynomial;
using algebra::PhaseIndex;

HamiltonianSpec::HamiltonianSpec(ClassicalPolynomial potential, double mass)
    : potential_(std::move(potential)), mass_(mass) {
  if (!(mass_ > 0) || !std::isfinite(mass_)) throw ContractError("HamiltonianSpec: mass must be positive and finite");
  if (potential_.ndof() != 1) throw ContractError("HamiltonianSpec: the potential must live in the ndof = 1 context");
  int degree = 0;
  for (const auto& [m, c] : potential_.terms()) {
    if (m.exponent(PhaseIndex::p()) != 0) throw UnsupportedInputError("HamiltonianSpec: V must depend on q only");
    degree = std::max(degree, m.exponent(PhaseIndex::q()));
  }
  if (degree > kMaxPotentialDegree)
    throw UnsupportedInputError("HamiltonianSpec: potential degree " + std::to_string(degree) + " exceeds " +
                                std::to_string(kMaxPotentialDegree));
  v_.assign(degree + 1, 0.0);
  for (const auto& [m, c] : potential_.terms()) v_[m.exponent(PhaseIndex::q())] = c.get_d();
  dv_.assign(std::max(degree, 1), 0.0);
  for (int k = 1; k <= degree; ++k) dv_[k - 1] = k * v_[k];
}

HamiltonianSpec HamiltonianSpec::harmonic(double omega, double mass) {
  const algebra::Rational k = algebra::Rational(mass) * algebra::Rational(omega) * algebra::Rational(omega) / 2;
  return HamiltonianSpec(ClassicalPolynomial::q().pow(2) * k, mass);
}

ClassicalPolynomial HamiltonianSpec::classical() const {
  const algebra::Rational inv_2m = 1 / (2 * algebra::Rational(mass_));
  return ClassicalPolynomial::p().pow(2) * inv_2m + potential_;
}

namespace {

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

double HamiltonianSpec::V(double q) const { return horner(v_, q); }
double HamiltonianSpec::dV(double q) const { return horner(dv_, q); }

}  // namespace kvn::phase_space
