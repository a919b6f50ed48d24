#pragma once

#include <Eigen/Core>

#include "kvn/algebra/classical_polynomial.hpp"
#include "kvn/algebra/operator_polynomial.hpp"

namespace kvn::algebra {

// omega^{ab} in the index order (q_0..q_{n-1}, p_0..p_{n-1}):
// omega^{q_j p_j} = +1, omega^{p_j q_j} = -1.
Eigen::MatrixXi symplectic_matrix(int ndof);

enum class BoppVariant { kUnbarred, kBarred };

// F = f(q,p) + sum_n (1/n!) (+-hbar/2)^n lambda_a1..lambda_an omega^{a1 b1}..omega^{an bn}
//     d_b1..d_bn f, lambdas written to the left of the derivative, then
// normal-ordered. The unbarred variant realizes f(Q, P) with the Bopp
// operators Q = q - hbar/2 lambda_p, P = p + hbar/2 lambda_q; the barred one
// flips the sign of hbar.
OperatorPolynomial bopp_quantize(const ClassicalPolynomial& f, BoppVariant variant = BoppVariant::kUnbarred);

// Same series with the lambdas placed to the right of the derivative factor.
// The full sum coincides with bopp_quantize; kept for ordering checks.
OperatorPolynomial bopp_quantize_lambda_right(const ClassicalPolynomial& f,
                                              BoppVariant variant = BoppVariant::kUnbarred);

// L = lambda_a omega^{ab} d_b H.
OperatorPolynomial liouvillian(const ClassicalPolynomial& h);

// The j-th term of the Moyal generator,
// hbar^{2j} / (2^{2j} (2j+1)!) lambda_a1..lambda_a(2j+1) omega.. d..d H.
// j = 0 is the Liouvillian, j = 1 is the cubic-in-lambda correction.
OperatorPolynomial moyal_term(const ClassicalPolynomial& h, int j);

// Sum of moyal_term over all j; terminates once 2j+1 > deg H.
OperatorPolynomial moyal_generator(const ClassicalPolynomial& h);

// G - (1/hbar) [H(Q,P) - H(Qbar,Pbar)]; identically zero for polynomial H.
OperatorPolynomial verify_difference_identity(const ClassicalPolynomial& h);

enum class Axis { kX = 0, kY = 1, kZ = 2 };

// Classical component of x cross p in the ndof = 3 context (x, y, z are dofs 0, 1, 2).
ClassicalPolynomial classical_angular_momentum(Axis axis);
OperatorPolynomial angular_momentum(Axis axis);

// [L, H(Q,P)] truncated at hbar^2.
OperatorPolynomial energy_nonconservation_leading(const ClassicalPolynomial& h);

// The same hbar^2 term in closed form,
//   -(hbar^2/8) w^{al be} w^{a1 b1} w^{a2 b2} (i l_a1 l_a2 d_al d_b1 d_b2 H d_be H
//                                            + l_al d_be d_a1 d_a2 H d_b1 d_b2 H),
// lambdas on the left, then normal-ordered.
OperatorPolynomial energy_nonconservation_closed_form(const ClassicalPolynomial& h);

// [F, G] - i hbar Bopp({f, g}); zero iff the pair satisfies the Dirac rule exactly.
OperatorPolynomial groenewald_probe(const ClassicalPolynomial& f, const ClassicalPolynomial& g);

}  // namespace kvn::algebra
