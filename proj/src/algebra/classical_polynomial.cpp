#include "kvn/algebra/classical_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kvn/errors.hpp"

namespace kvn::algebra {

namespace {

void check_ndof(int ndof) {
  if (ndof < 1 || ndof > kMaxDof)
    throw ContractError("ndof must be in [1, " + std::to_string(kMaxDof) + "], got " + std::to_string(ndof));
}

void check_same_context(const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
  if (a.ndof() != b.ndof())
    throw ContractError("classical polynomials live in different contexts (ndof " + std::to_string(a.ndof()) +
                        " vs " + std::to_string(b.ndof()) + ")");
}

}  // namespace

int ClassicalMonomial::slot(PhaseIndex idx) {
  if (is_lambda(idx.kind)) throw ContractError("classical monomials carry no lambda symbols");
  if (idx.dof < 0 || idx.dof >= kMaxDof) throw ContractError("degree-of-freedom index out of range");
  return (idx.kind == PhaseKind::kPosition ? 0 : kMaxDof) + idx.dof;
}

ClassicalMonomial ClassicalMonomial::of(PhaseIndex idx, int power) {
  ClassicalMonomial m;
  m.set_exponent(idx, power);
  return m;
}

void ClassicalMonomial::set_exponent(PhaseIndex idx, int power) {
  if (power < 0 || power > 255) throw ContractError("monomial exponent out of range");
  e_[slot(idx)] = static_cast<std::uint8_t>(power);
}

int ClassicalMonomial::degree() const {
  int d = 0;
  for (auto x : e_) d += x;
  return d;
}

int ClassicalMonomial::max_dof() const {
  int top = -1;
  for (int s = 0; s < 2 * kMaxDof; ++s)
    if (e_[s] != 0) top = std::max(top, s % kMaxDof);
  return top;
}

Monomial ClassicalMonomial::to_operator_monomial() const {
  Monomial m;
  for (int j = 0; j < kMaxDof; ++j) {
    m.set_exponent(PhaseIndex::q(j), e_[j]);
    m.set_exponent(PhaseIndex::p(j), e_[kMaxDof + j]);
  }
  return m;
}

ClassicalMonomial operator*(const ClassicalMonomial& a, const ClassicalMonomial& b) {
  ClassicalMonomial m;
  for (int s = 0; s < 2 * kMaxDof; ++s) {
    int v = a.e_[s] + b.e_[s];
    if (v > 255) throw DegreeOverflowError("monomial exponent overflow");
    m.e_[s] = static_cast<std::uint8_t>(v);
  }
  return m;
}

ClassicalPolynomial::ClassicalPolynomial(int ndof) : ndof_(ndof) { check_ndof(ndof); }

ClassicalPolynomial ClassicalPolynomial::constant(int ndof, const Rational& c) {
  ClassicalPolynomial out(ndof);
  out.add_term(ClassicalMonomial(), c);
  return out;
}

ClassicalPolynomial ClassicalPolynomial::variable(int ndof, PhaseIndex idx) {
  if (idx.dof >= ndof) throw ContractError("variable dof outside the ndof context");
  ClassicalPolynomial out(ndof);
  out.add_term(ClassicalMonomial::of(idx), 1);
  return out;
}

int ClassicalPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational ClassicalPolynomial::coefficient(const ClassicalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ClassicalPolynomial::add_term(const ClassicalMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (m.max_dof() >= ndof_) throw ContractError("monomial references a dof outside the ndof context");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ClassicalPolynomial ClassicalPolynomial::derivative(PhaseIndex idx) const {
  ClassicalPolynomial out(ndof_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(idx);
    if (e == 0) continue;
    ClassicalMonomial d = m;
    d.set_exponent(idx, e - 1);
    out.add_term(d, c * e);
  }
  return out;
}

ClassicalPolynomial ClassicalPolynomial::pow(int n) const {
  if (n < 0) throw UnsupportedInputError("negative powers are not polynomial");
  ClassicalPolynomial out = constant(ndof_, 1);
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

double ClassicalPolynomial::evaluate(std::span<const double> q, std::span<const double> p) const {
  if (static_cast<int>(q.size()) < ndof_ || static_cast<int>(p.size()) < ndof_)
    throw ContractError("evaluate: coordinate arrays shorter than ndof");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.get_d();
    for (int j = 0; j < ndof_; ++j) {
      for (int k = 0; k < m.exponent(PhaseIndex::q(j)); ++k) v *= q[j];
      for (int k = 0; k < m.exponent(PhaseIndex::p(j)); ++k) v *= p[j];
    }
    sum += v;
  }
  return sum;
}

double ClassicalPolynomial::evaluate(double q, double p) const {
  return evaluate(std::span<const double>(&q, 1), std::span<const double>(&p, 1));
}

OperatorPolynomial ClassicalPolynomial::to_operator() const {
  OperatorPolynomial out(ndof_);
  for (const auto& [m, c] : terms_) out.add_term(m.to_operator_monomial(), HbarCoefficient(ComplexRational(c)));
  return out;
}

ClassicalPolynomial& ClassicalPolynomial::operator+=(const ClassicalPolynomial& o) {
  check_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ClassicalPolynomial& ClassicalPolynomial::operator-=(const ClassicalPolynomial& o) {
  check_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ClassicalPolynomial& ClassicalPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

ClassicalPolynomial operator-(const ClassicalPolynomial& a) { return a * Rational(-1); }

ClassicalPolynomial operator*(const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
  check_same_context(a, b);
  ClassicalPolynomial out(a.ndof());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

ClassicalPolynomial poisson_bracket(const ClassicalPolynomial& f, const ClassicalPolynomial& g) {
  check_same_context(f, g);
  ClassicalPolynomial out(f.ndof());
  for (int j = 0; j < f.ndof(); ++j) {
    out += f.derivative(PhaseIndex::q(j)) * g.derivative(PhaseIndex::p(j));
    out -= f.derivative(PhaseIndex::p(j)) * g.derivative(PhaseIndex::q(j));
  }
  return out;
}

}  // namespace kvn::algebra
