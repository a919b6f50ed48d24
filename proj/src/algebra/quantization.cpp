#include "kvn/algebra/quantization.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>

#include "kvn/errors.hpp"

namespace kvn::algebra {

namespace {

// Pure-lambda monomial -> classical coefficient, standing for
// sum lambda^mu * g_mu(q, p) with the ordering left open.
using LambdaSeries = std::map<Monomial, ClassicalPolynomial>;

PhaseIndex lambda_of_row(int a, int ndof) { return a < ndof ? PhaseIndex::lq(a) : PhaseIndex::lp(a - ndof); }
PhaseIndex phi_of_column(int b, int ndof) { return b < ndof ? PhaseIndex::q(b) : PhaseIndex::p(b - ndof); }

// One more factor of lambda_a omega^{ab} d_b.
LambdaSeries apply_symplectic_gradient(const LambdaSeries& s, int ndof, const Eigen::MatrixXi& omega) {
  LambdaSeries out;
  for (const auto& [mu, g] : s) {
    for (int a = 0; a < 2 * ndof; ++a) {
      for (int b = 0; b < 2 * ndof; ++b) {
        if (omega(a, b) == 0) continue;
        ClassicalPolynomial d = g.derivative(phi_of_column(b, ndof));
        if (d.is_zero()) continue;
        d *= Rational(omega(a, b));
        const Monomial key = mu * Monomial::of(lambda_of_row(a, ndof));
        auto [it, inserted] = out.try_emplace(key, d);
        if (!inserted) it->second += d;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

enum class LambdaPlacement { kLeft, kRight };

void accumulate_series(OperatorPolynomial& out, const LambdaSeries& s, const HbarCoefficient& weight,
                       LambdaPlacement placement) {
  const int ndof = out.ndof();
  for (const auto& [mu, g] : s) {
    for (const auto& [cm, r] : g.terms()) {
      const Monomial phi = cm.to_operator_monomial();
      const int cap = std::max(kDefaultDegreeCap, mu.degree() + phi.degree());
      const OperatorPolynomial word = placement == LambdaPlacement::kLeft
                                          ? normal_order_product(mu, phi, ndof, cap)
                                          : normal_order_product(phi, mu, ndof, cap);
      const HbarCoefficient c = weight * ComplexRational(r);
      for (const auto& [m, wc] : word.terms()) out.add_term(m, wc * c);
    }
  }
}

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Rational power_of_two(int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= 2;
  return r;
}

OperatorPolynomial bopp_series(const ClassicalPolynomial& f, BoppVariant variant, LambdaPlacement placement) {
  const int ndof = f.ndof();
  const Eigen::MatrixXi omega = symplectic_matrix(ndof);
  OperatorPolynomial out(ndof);
  LambdaSeries series{{Monomial(), f}};
  for (int n = 0; !series.empty(); ++n) {
    Rational c = 1 / (factorial(n) * power_of_two(n));
    if (variant == BoppVariant::kBarred && n % 2 == 1) c = -c;
    accumulate_series(out, series, HbarCoefficient(ComplexRational(c), n), placement);
    series = apply_symplectic_gradient(series, ndof, omega);
  }
  return out;
}

}  // namespace

Eigen::MatrixXi symplectic_matrix(int ndof) {
  if (ndof < 1 || ndof > kMaxDof) throw ContractError("symplectic_matrix: ndof out of range");
  Eigen::MatrixXi omega = Eigen::MatrixXi::Zero(2 * ndof, 2 * ndof);
  for (int j = 0; j < ndof; ++j) {
    omega(j, ndof + j) = 1;
    omega(ndof + j, j) = -1;
  }
  return omega;
}

OperatorPolynomial bopp_quantize(const ClassicalPolynomial& f, BoppVariant variant) {
  return bopp_series(f, variant, LambdaPlacement::kLeft);
}

OperatorPolynomial bopp_quantize_lambda_right(const ClassicalPolynomial& f, BoppVariant variant) {
  return bopp_series(f, variant, LambdaPlacement::kRight);
}

OperatorPolynomial liouvillian(const ClassicalPolynomial& h) { return moyal_term(h, 0); }

OperatorPolynomial moyal_term(const ClassicalPolynomial& h, int j) {
  if (j < 0) throw ContractError("moyal_term: negative order");
  const int ndof = h.ndof();
  const Eigen::MatrixXi omega = symplectic_matrix(ndof);
  LambdaSeries series{{Monomial(), h}};
  for (int n = 0; n < 2 * j + 1 && !series.empty(); ++n) series = apply_symplectic_gradient(series, ndof, omega);
  OperatorPolynomial out(ndof);
  const Rational c = 1 / (power_of_two(2 * j) * factorial(2 * j + 1));
  accumulate_series(out, series, HbarCoefficient(ComplexRational(c), 2 * j), LambdaPlacement::kLeft);
  return out;
}

OperatorPolynomial moyal_generator(const ClassicalPolynomial& h) {
  OperatorPolynomial out(h.ndof());
  for (int j = 0; 2 * j + 1 <= h.degree(); ++j) out += moyal_term(h, j);
  return out;
}

OperatorPolynomial verify_difference_identity(const ClassicalPolynomial& h) {
  const OperatorPolynomial bracket = bopp_quantize(h, BoppVariant::kUnbarred) - bopp_quantize(h, BoppVariant::kBarred);
  return moyal_generator(h) - divide_by_hbar(bracket);
}

ClassicalPolynomial classical_angular_momentum(Axis axis) {
  constexpr int n = 3;
  const int i = static_cast<int>(axis);
  if (i < 0 || i > 2) throw ContractError("angular_momentum: invalid axis");
  const int j = (i + 1) % 3;
  const int k = (i + 2) % 3;
  // M_i = r_j p_k - r_k p_j
  return ClassicalPolynomial::q(n, j) * ClassicalPolynomial::p(n, k) -
         ClassicalPolynomial::q(n, k) * ClassicalPolynomial::p(n, j);
}

OperatorPolynomial angular_momentum(Axis axis) { return bopp_quantize(classical_angular_momentum(axis)); }

OperatorPolynomial energy_nonconservation_leading(const ClassicalPolynomial& h) {
  return commutator(liouvillian(h), bopp_quantize(h)).truncated(2);
}

OperatorPolynomial energy_nonconservation_closed_form(const ClassicalPolynomial& h) {
  const int n = h.ndof();
  const int dim = 2 * n;
  const Eigen::MatrixXi w = symplectic_matrix(n);
  const auto lam = [n](int a) { return OperatorPolynomial::symbol(n, lambda_of_row(a, n)); };
  const auto d = [n](ClassicalPolynomial f, std::initializer_list<int> idx) {
    for (int a : idx) f = f.derivative(phi_of_column(a, n));
    return f;
  };
  const HbarCoefficient i(ComplexRational::i());
  OperatorPolynomial sum(n);
  for (int al = 0; al < dim; ++al)
    for (int be = 0; be < dim; ++be)
      for (int a1 = 0; a1 < dim; ++a1)
        for (int b1 = 0; b1 < dim; ++b1)
          for (int a2 = 0; a2 < dim; ++a2)
            for (int b2 = 0; b2 < dim; ++b2) {
              const int sign = w(al, be) * w(a1, b1) * w(a2, b2);
              if (sign == 0) continue;
              const OperatorPolynomial t1 = (d(h, {al, b1, b2}) * d(h, {be})).to_operator();
              const OperatorPolynomial t2 = (d(h, {be, a1, a2}) * d(h, {b1, b2})).to_operator();
              const OperatorPolynomial term = scale(lam(a1) * lam(a2) * t1, i) + lam(al) * t2;
              sum += scale(term, HbarCoefficient(sign));
            }
  return scale(sum, HbarCoefficient(ComplexRational(Rational(-1, 8)), 2));
}

OperatorPolynomial groenewald_probe(const ClassicalPolynomial& f, const ClassicalPolynomial& g) {
  const OperatorPolynomial lhs = commutator(bopp_quantize(f), bopp_quantize(g));
  const HbarCoefficient i_hbar(ComplexRational::i(), 1);
  return lhs - scale(bopp_quantize(poisson_bracket(f, g)), i_hbar);
}

}  // namespace kvn::algebra
