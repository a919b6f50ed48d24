#include "kvn/algebra/operator_polynomial.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "kvn/errors.hpp"

namespace kvn::algebra {

namespace {

void check_ndof(int ndof) {
  if (ndof < 1 || ndof > kMaxDof)
    throw ContractError("ndof must be in [1, " + std::to_string(kMaxDof) + "], got " + std::to_string(ndof));
}

void check_same_context(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  if (a.ndof() != b.ndof())
    throw ContractError("operator polynomials live in different contexts (ndof " + std::to_string(a.ndof()) +
                        " vs " + std::to_string(b.ndof()) + ")");
}

void check_fits(const Monomial& m, int ndof) {
  if (m.max_dof() >= ndof) throw ContractError("monomial references a dof outside the ndof context");
}

struct Contraction {
  int k;
  Rational weight;  // C(m,k) n!/(n-k)!
};

std::vector<Contraction> contractions(int m, int n) {
  std::vector<Contraction> out;
  Rational weight = 1;
  const int top = std::min(m, n);
  for (int k = 0; k <= top; ++k) {
    out.push_back({k, weight});
    // C(m,k+1) n!/(n-k-1)! = C(m,k) n!/(n-k)! * (m-k)/(k+1) * (n-k)
    weight *= Rational((m - k) * (n - k));
    weight /= Rational(k + 1);
  }
  return out;
}

}  // namespace

OperatorPolynomial::OperatorPolynomial(int ndof) : ndof_(ndof) { check_ndof(ndof); }

OperatorPolynomial OperatorPolynomial::constant(int ndof, const HbarCoefficient& c) {
  OperatorPolynomial out(ndof);
  out.add_term(Monomial(), c);
  return out;
}

OperatorPolynomial OperatorPolynomial::symbol(int ndof, PhaseIndex idx) {
  if (idx.dof >= ndof) throw ContractError("symbol dof outside the ndof context");
  return term(ndof, Monomial::of(idx), HbarCoefficient(1));
}

OperatorPolynomial OperatorPolynomial::term(int ndof, const Monomial& m, const HbarCoefficient& c) {
  OperatorPolynomial out(ndof);
  check_fits(m, ndof);
  out.add_term(m, c);
  return out;
}

int OperatorPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int OperatorPolynomial::max_hbar_power() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, c.max_power());
  return d;
}

HbarCoefficient OperatorPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? HbarCoefficient() : it->second;
}

OperatorPolynomial OperatorPolynomial::hbar_component(int power) const {
  OperatorPolynomial out(ndof_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.component(power));
  return out;
}

OperatorPolynomial OperatorPolynomial::truncated(int max_hbar_power) const {
  OperatorPolynomial out(ndof_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.truncated(max_hbar_power));
  return out;
}

void OperatorPolynomial::add_term(const Monomial& m, const HbarCoefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPolynomial& OperatorPolynomial::operator+=(const OperatorPolynomial& o) {
  check_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorPolynomial& OperatorPolynomial::operator-=(const OperatorPolynomial& o) {
  check_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorPolynomial operator-(const OperatorPolynomial& a) {
  OperatorPolynomial out(a.ndof());
  for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
  return out;
}

OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  return multiply(a, b);
}

OperatorPolynomial normal_order_product(const Monomial& a, const Monomial& b, int ndof, int degree_cap) {
  check_ndof(ndof);
  check_fits(a, ndof);
  check_fits(b, ndof);
  if (a.degree() + b.degree() > degree_cap)
    throw DegreeOverflowError("product degree " + std::to_string(a.degree() + b.degree()) +
                              " exceeds the cap " + std::to_string(degree_cap));

  // Only lambda factors of a meeting phi factors of b need reordering.
  struct Pair {
    PhaseIndex phi;
    PhaseIndex lambda;
    std::vector<Contraction> options;
  };
  std::vector<Pair> pairs;
  for (int j = 0; j < ndof; ++j) {
    for (PhaseKind kind : {PhaseKind::kPosition, PhaseKind::kMomentum}) {
      PhaseIndex phi{kind, j};
      PhaseIndex lambda{conjugate(kind), j};
      const int m = a.exponent(lambda);
      const int n = b.exponent(phi);
      if (m > 0 && n > 0) pairs.push_back({phi, lambda, contractions(m, n)});
    }
  }

  const Monomial base = a * b;
  OperatorPolynomial out(ndof);
  std::vector<size_t> choice(pairs.size(), 0);
  while (true) {
    Monomial m = base;
    Rational weight = 1;
    int total_k = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
      const Contraction& c = pairs[i].options[choice[i]];
      if (c.k > 0) {
        m.set_exponent(pairs[i].phi, m.exponent(pairs[i].phi) - c.k);
        m.set_exponent(pairs[i].lambda, m.exponent(pairs[i].lambda) - c.k);
      }
      weight *= c.weight;
      total_k += c.k;
    }
    out.add_term(m, HbarCoefficient(minus_i_power(total_k) * ComplexRational(weight)));

    size_t i = 0;
    for (; i < pairs.size(); ++i) {
      if (++choice[i] < pairs[i].options.size()) break;
      choice[i] = 0;
    }
    if (i == pairs.size()) break;
  }
  return out;
}

OperatorPolynomial multiply(const OperatorPolynomial& a, const OperatorPolynomial& b, int degree_cap) {
  check_same_context(a, b);
  OperatorPolynomial out(a.ndof());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const HbarCoefficient weight = ca * cb;
      if (weight.is_zero()) continue;
      const OperatorPolynomial word = normal_order_product(ma, mb, a.ndof(), degree_cap);
      for (const auto& [m, c] : word.terms()) out.add_term(m, c * weight);
    }
  }
  return out;
}

OperatorPolynomial scale(const OperatorPolynomial& a, const HbarCoefficient& c) {
  OperatorPolynomial out(a.ndof());
  for (const auto& [m, coef] : a.terms()) out.add_term(m, coef * c);
  return out;
}

OperatorPolynomial hermitian_conjugate(const OperatorPolynomial& a) {
  // (c phi^A lambda^B)^dagger = conj(c) lambda^B phi^A
  OperatorPolynomial out(a.ndof());
  for (const auto& [m, c] : a.terms()) {
    const OperatorPolynomial word =
        normal_order_product(m.lambda_part(), m.phi_part(), a.ndof(), std::max(m.degree(), kDefaultDegreeCap));
    const HbarCoefficient cc = c.conj();
    for (const auto& [wm, wc] : word.terms()) out.add_term(wm, wc * cc);
  }
  return out;
}

OperatorPolynomial commutator(const OperatorPolynomial& a, const OperatorPolynomial& b, int degree_cap) {
  return multiply(a, b, degree_cap) - multiply(b, a, degree_cap);
}

OperatorPolynomial substitute_hbar(const OperatorPolynomial& a, const Rational& value) {
  OperatorPolynomial out(a.ndof());
  for (const auto& [m, c] : a.terms()) out.add_term(m, HbarCoefficient(c.evaluate(value)));
  return out;
}

OperatorPolynomial divide_by_hbar(const OperatorPolynomial& a) {
  OperatorPolynomial out(a.ndof());
  for (const auto& [m, c] : a.terms()) {
    if (!c.at(0).is_zero())
      throw ContractError("cannot divide by hbar: the polynomial has a nonzero hbar^0 component");
    out.add_term(m, c.shifted(-1));
  }
  return out;
}

bool is_hermitian(const OperatorPolynomial& a) { return hermitian_conjugate(a) == a; }

}  // namespace kvn::algebra
