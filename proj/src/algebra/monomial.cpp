#include "kvn/algebra/monomial.hpp"

#include <algorithm>

#include "kvn/errors.hpp"

namespace kvn::algebra {

namespace {

void check_index(PhaseIndex idx) {
  if (idx.dof < 0 || idx.dof >= kMaxDof) throw ContractError("degree-of-freedom index out of range");
}

}  // namespace

Monomial Monomial::of(PhaseIndex idx, int power) {
  Monomial m;
  m.set_exponent(idx, power);
  return m;
}

void Monomial::set_exponent(PhaseIndex idx, int power) {
  check_index(idx);
  if (power < 0 || power > 255) throw ContractError("monomial exponent out of range");
  e_[slot(idx)] = static_cast<std::uint8_t>(power);
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

int Monomial::lambda_degree() const {
  int d = 0;
  for (int s = 2 * kMaxDof; s < 4 * kMaxDof; ++s) d += e_[s];
  return d;
}

int Monomial::max_dof() const {
  int top = -1;
  for (int s = 0; s < 4 * kMaxDof; ++s)
    if (e_[s] != 0) top = std::max(top, s % kMaxDof);
  return top;
}

Monomial Monomial::phi_part() const {
  Monomial m = *this;
  for (int s = 2 * kMaxDof; s < 4 * kMaxDof; ++s) m.e_[s] = 0;
  return m;
}

Monomial Monomial::lambda_part() const {
  Monomial m = *this;
  for (int s = 0; s < 2 * kMaxDof; ++s) m.e_[s] = 0;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int s = 0; s < 4 * kMaxDof; ++s) {
    int v = a.e_[s] + b.e_[s];
    if (v > 255) throw DegreeOverflowError("monomial exponent overflow");
    m.e_[s] = static_cast<std::uint8_t>(v);
  }
  return m;
}

}  // namespace kvn::algebra
