#pragma once

// Weyl-ordered application of a classical polynomial. apply_q(x, n) and
// apply_p(x, n) return Q^n x and P^n x.

#include "kvn/algebra/classical_polynomial.hpp"

namespace kvn::embedding::detail {

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// f(Q^, P^) x with each q^a p^b read as 2^-a sum_k C(a,k) Q^k P^b Q^(a-k).
template <class V, class ApplyQ, class ApplyP>
V apply_weyl(const algebra::ClassicalPolynomial& f, const V& x, ApplyQ apply_q, ApplyP apply_p) {
  using algebra::PhaseIndex;
  V out = x * 0.0;
  for (const auto& [m, c] : f.terms()) {
    const int a = m.exponent(PhaseIndex::q(0));
    const int b = m.exponent(PhaseIndex::p(0));
    if (a == 0 || b == 0) {
      out += c.get_d() * (a == 0 ? apply_p(x, b) : apply_q(x, a));
      continue;
    }
    const double coef = c.get_d() / static_cast<double>(1 << a);
    for (int k = 0; k <= a; ++k) out += (coef * binomial(a, k)) * apply_q(apply_p(apply_q(x, a - k), b), k);
  }
  return out;
}

}  // namespace kvn::embedding::detail
