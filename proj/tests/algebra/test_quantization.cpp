#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "kvn/algebra/quantization.hpp"
#include "kvn/algebra/text.hpp"
#include "kvn/errors.hpp"
#include "word_oracle.hpp"

namespace kvn::algebra {
namespace {

using testing::random_classical;

ClassicalPolynomial cq(int n = 1, int j = 0) { return ClassicalPolynomial::q(n, j); }
ClassicalPolynomial cp(int n = 1, int j = 0) { return ClassicalPolynomial::p(n, j); }
ClassicalPolynomial rat(const Rational& r, int n = 1) { return ClassicalPolynomial::constant(n, r); }

OperatorPolynomial op(const char* text, int ndof = 1) { return parse_operator(text, ndof); }

TEST(Symplectic, AntisymmetricAndSquaresToMinusOne) {
  for (int n = 1; n <= 4; ++n) {
    const Eigen::MatrixXi w = symplectic_matrix(n);
    EXPECT_EQ(w.transpose(), -w);
    EXPECT_EQ(w * w, -Eigen::MatrixXi::Identity(2 * n, 2 * n));
  }
}

TEST(Bopp, BasicSymbols) {
  EXPECT_EQ(bopp_quantize(cq()), op("q - hbar/2*lp"));
  EXPECT_EQ(bopp_quantize(cp()), op("p + hbar/2*lq"));
  EXPECT_EQ(bopp_quantize(cq(), BoppVariant::kBarred), op("q + hbar/2*lp"));
  EXPECT_EQ(bopp_quantize(cp(), BoppVariant::kBarred), op("p - hbar/2*lq"));
}

TEST(Bopp, ProductQP) {
  EXPECT_EQ(bopp_quantize(cq() * cp()), op("q*p + hbar/2*(q*lq - p*lp) - hbar^2/4*lq*lp"));
}

TEST(Bopp, MatchesWeylSymmetrizedBoppOperators) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 25; ++t) {
    const ClassicalPolynomial f = random_classical(rng, 1, 5, 4);
    ASSERT_EQ(bopp_quantize(f), testing::mccoy_weyl(f)) << render(f);
    ASSERT_EQ(bopp_quantize(f, BoppVariant::kBarred), testing::mccoy_weyl(f, true)) << render(f);
  }
}

TEST(Bopp, LambdaPlacementDoesNotMatter) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 2;
    const ClassicalPolynomial f = random_classical(rng, n, 5, 5);
    ASSERT_EQ(bopp_quantize(f), bopp_quantize_lambda_right(f)) << render(f);
  }
}

TEST(Bopp, LinearHermitianAndClassicalLimit) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 3;
    const ClassicalPolynomial f = random_classical(rng, n, 4, 4);
    const ClassicalPolynomial g = random_classical(rng, n, 4, 4);
    const OperatorPolynomial F = bopp_quantize(f);
    ASSERT_EQ(bopp_quantize(f + g), F + bopp_quantize(g));
    ASSERT_EQ(bopp_quantize(f * Rational(3, 7)), scale(F, HbarCoefficient(ComplexRational(Rational(3, 7)))));
    ASSERT_TRUE(is_hermitian(F)) << render(f);
    ASSERT_EQ(substitute_hbar(F, 0), f.to_operator());
    // hbar -> 0 is multiplicative on the image of the quantization map.
    ASSERT_EQ(substitute_hbar(F * bopp_quantize(g), 0), (f * g).to_operator());
  }
}

TEST(Heisenberg, ThreeDegreesOfFreedom) {
  constexpr int n = 3;
  const OperatorPolynomial i_hbar = OperatorPolynomial::constant(n, HbarCoefficient(ComplexRational::i(), 1));
  for (auto variant : {BoppVariant::kUnbarred, BoppVariant::kBarred}) {
    const OperatorPolynomial expected = variant == BoppVariant::kUnbarred ? i_hbar : -i_hbar;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const auto Qj = bopp_quantize(cq(n, j), variant);
        const auto Pk = bopp_quantize(cp(n, k), variant);
        EXPECT_EQ(commutator(Qj, Pk), j == k ? expected : OperatorPolynomial(n));
        EXPECT_TRUE(commutator(Qj, bopp_quantize(cq(n, k), variant)).is_zero());
        EXPECT_TRUE(commutator(bopp_quantize(cp(n, j), variant), Pk).is_zero());
      }
    }
  }
  // Barred and unbarred operators always commute.
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (const auto& a : {cq(n, j), cp(n, j)}) {
        for (const auto& b : {cq(n, k), cp(n, k)}) {
          EXPECT_TRUE(commutator(bopp_quantize(a), bopp_quantize(b, BoppVariant::kBarred)).is_zero());
        }
      }
    }
  }
  EXPECT_EQ(substitute_hbar(bopp_quantize(cq(n, 1)), 0), OperatorPolynomial::symbol(n, PhaseIndex::q(1)));
}

TEST(AngularMomentum, MatchesDisplayTermByTerm) {
  // Written in the display's own factor order; the parser normal-orders.
  const OperatorPolynomial mx =
      op("y*pz - z*py - 1/2*hbar*(ly*z - lz*y + lpy*pz - lpz*py) - 1/4*hbar^2*(lpy*lz - ly*lpz)", 3);
  const OperatorPolynomial my =
      op("z*px - x*pz - 1/2*hbar*(lz*x - lx*z + lpz*px - lpx*pz) - 1/4*hbar^2*(lpz*lx - lz*lpx)", 3);
  const OperatorPolynomial mz =
      op("x*py - y*px - 1/2*hbar*(lx*y - ly*x + lpx*py - lpy*px) - 1/4*hbar^2*(lpx*ly - lx*lpy)", 3);
  EXPECT_EQ(angular_momentum(Axis::kX), mx);
  EXPECT_EQ(angular_momentum(Axis::kY), my);
  EXPECT_EQ(angular_momentum(Axis::kZ), mz);
  EXPECT_EQ(angular_momentum(Axis::kZ).hbar_component(0), op("x*py - y*px", 3));
  EXPECT_EQ(angular_momentum(Axis::kZ).hbar_component(2), op("-1/4*hbar^2*(lpx*ly - lx*lpy)", 3));
}

TEST(AngularMomentum, ClosesTheRotationAlgebra) {
  const HbarCoefficient i_hbar(ComplexRational::i(), 1);
  const std::vector<OperatorPolynomial> m = {angular_momentum(Axis::kX), angular_momentum(Axis::kY),
                                             angular_momentum(Axis::kZ)};
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(commutator(m[i], m[i]).is_zero());
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    EXPECT_EQ(commutator(m[i], m[j]), scale(m[k], i_hbar));
    EXPECT_EQ(commutator(m[j], m[i]), -scale(m[k], i_hbar));
  }
  EXPECT_THROW(angular_momentum(static_cast<Axis>(5)), ContractError);
}

TEST(Liouvillian, Examples) {
  EXPECT_TRUE(liouvillian(ClassicalPolynomial(1)).is_zero());
  EXPECT_EQ(liouvillian(cq().pow(4) * Rational(1, 4)), op("-q^3*lp"));
  // H = p^2/2m + V(q), m = 2, V = q^3 - q.
  const auto h = cp().pow(2) * Rational(1, 4) + cq().pow(3) - cq();
  EXPECT_EQ(liouvillian(h), op("p/2*lq - (3*q^2 - 1)*lp"));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto H = random_classical(rng, 1 + t % 2, 5, 5);
    ASSERT_TRUE(is_hermitian(liouvillian(H))) << render(H);
    // The classical energy is conserved by the Liouvillian.
    ASSERT_TRUE(commutator(liouvillian(H), H.to_operator()).is_zero()) << render(H);
  }
}

TEST(Moyal, Examples) {
  const auto quad = cp().pow(2) * Rational(1, 2) + cq().pow(2) * Rational(3, 2) + cq() * cp();
  EXPECT_EQ(moyal_generator(quad), liouvillian(quad));
  EXPECT_EQ(moyal_generator(cq().pow(4) * Rational(1, 4)), op("-q^3*lp - hbar^2/4*q*lp^3"));
  // V cubic: the j = 1 term is -(hbar^2/24) V''' lp^3.
  const auto v = cq().pow(3) * Rational(5) + cq().pow(2);
  const auto h = cp().pow(2) * Rational(1, 2) + v;
  EXPECT_EQ(moyal_generator(h), liouvillian(h) - op("hbar^2/24*30*lp^3"));
  EXPECT_EQ(moyal_term(h, 0), liouvillian(h));
  EXPECT_EQ(substitute_hbar(moyal_generator(h), 0), liouvillian(h));
}

TEST(Moyal, DifferenceIdentityOnRandomHamiltonians) {
  EXPECT_TRUE(verify_difference_identity(cp().pow(2) * Rational(1, 2)).is_zero());
  EXPECT_TRUE(verify_difference_identity(cq().pow(4) * Rational(1, 4)).is_zero());
  EXPECT_TRUE(verify_difference_identity(ClassicalPolynomial(1)).is_zero());
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 2;
    const auto H = random_classical(rng, n, 6, 6);
    ASSERT_TRUE(verify_difference_identity(H).is_zero()) << render(H);
  }
}

TEST(Moyal, ConservesQuantumEnergy) {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 12; ++t) {
    const auto H = random_classical(rng, 1, 6, 6);
    ASSERT_TRUE(commutator(moyal_generator(H), bopp_quantize(H)).is_zero()) << render(H);
  }
  const auto quartic = cp().pow(2) * Rational(1, 2) + cq().pow(4) * Rational(1, 4);
  EXPECT_TRUE(commutator(moyal_generator(quartic), bopp_quantize(quartic)).is_zero());
}

// Direct transcription of the leading non-conservation term:
// -(hbar^2/8) w^{al be} w^{a1 b1} w^{a2 b2} (i l_a1 l_a2 d_al d_b1 d_b2 H d_be H
//                                           + l_al d_be d_a1 d_a2 H d_b1 d_b2 H),
// with the lambdas written on the left before normal ordering.
OperatorPolynomial displayed_nonconservation(const ClassicalPolynomial& h) {
  const int n = h.ndof();
  const Eigen::MatrixXi w = symplectic_matrix(n);
  auto phi = [n](int a) { return a < n ? PhaseIndex::q(a) : PhaseIndex::p(a - n); };
  auto lam = [n](int a) {
    return OperatorPolynomial::symbol(n, a < n ? PhaseIndex::lq(a) : PhaseIndex::lp(a - n));
  };
  auto d = [&](const ClassicalPolynomial& f, std::initializer_list<int> idx) {
    ClassicalPolynomial out = f;
    for (int a : idx) out = out.derivative(phi(a));
    return out;
  };
  const HbarCoefficient i(ComplexRational::i());
  OperatorPolynomial sum(n);
  const int dim = 2 * n;
  for (int al = 0; al < dim; ++al)
    for (int be = 0; be < dim; ++be)
      for (int a1 = 0; a1 < dim; ++a1)
        for (int b1 = 0; b1 < dim; ++b1)
          for (int a2 = 0; a2 < dim; ++a2)
            for (int b2 = 0; b2 < dim; ++b2) {
              const int sign = w(al, be) * w(a1, b1) * w(a2, b2);
              if (sign == 0) continue;
              const auto t1 = (d(h, {al, b1, b2}) * d(h, {be})).to_operator();
              const auto t2 = (d(h, {be, a1, a2}) * d(h, {b1, b2})).to_operator();
              OperatorPolynomial term = scale(lam(a1) * lam(a2) * t1, i) + lam(al) * t2;
              sum += scale(term, HbarCoefficient(sign));
            }
  return scale(sum, HbarCoefficient(ComplexRational(Rational(-1, 8)), 2));
}

TEST(EnergyNonconservation, MatchesDisplayAndIsCancelledByCubicTerm) {
  const auto h = cp().pow(2) * Rational(1, 2) + cq().pow(4) * Rational(1, 4);
  const OperatorPolynomial lead = energy_nonconservation_leading(h);
  EXPECT_FALSE(lead.is_zero());
  EXPECT_TRUE(lead.hbar_component(0).is_zero());
  EXPECT_TRUE(lead.hbar_component(1).is_zero());
  EXPECT_EQ(lead, displayed_nonconservation(h)) << render(lead);
  const OperatorPolynomial cancel = commutator(moyal_term(h, 1), bopp_quantize(h)).truncated(2);
  EXPECT_EQ(cancel, -lead);
}

TEST(EnergyNonconservation, QuadraticHamiltoniansConserve) {
  const auto h = cp().pow(2) * Rational(1, 2) + cq().pow(2) * Rational(7, 2) - cq() * cp();
  EXPECT_TRUE(energy_nonconservation_leading(h).is_zero());
  EXPECT_TRUE(commutator(liouvillian(h), bopp_quantize(h)).is_zero());
}

TEST(EnergyNonconservation, DisplayOnRandomHamiltonians) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 8; ++t) {
    const auto H = random_classical(rng, 1 + t % 2, 5, 4);
    ASSERT_EQ(energy_nonconservation_leading(H), displayed_nonconservation(H)) << render(H);
  }
}

TEST(Groenewald, ProbeResiduals) {
  EXPECT_TRUE(groenewald_probe(cq(), cp()).is_zero());
  EXPECT_TRUE(groenewald_probe(cq().pow(2), cp().pow(2)).is_zero());
  const OperatorPolynomial r = groenewald_probe(cq().pow(3), cp().pow(3));
  EXPECT_EQ(r, op("-3/2*i*hbar^3"));
}

TEST(Groenewald, ResidualAgreesWithWordOracle) {
  // Same residual assembled from McCoy-symmetrized words and the rewriting oracle.
  const auto f = cq().pow(3);
  const auto g = cp().pow(3);
  const auto F = testing::mccoy_weyl(f);
  const auto G = testing::mccoy_weyl(g);
  const auto lhs = testing::oracle_multiply(F, G) - testing::oracle_multiply(G, F);
  const auto rhs = scale(testing::mccoy_weyl(poisson_bracket(f, g)), HbarCoefficient(ComplexRational::i(), 1));
  EXPECT_EQ(groenewald_probe(f, g), lhs - rhs);
}

TEST(Poisson, Examples) {
  EXPECT_EQ(poisson_bracket(cq(), cp()), rat(1));
  EXPECT_EQ(poisson_bracket(cq().pow(2), cp().pow(2)), cq() * cp() * Rational(4));
  const auto h = cp().pow(2) + cq().pow(4);
  EXPECT_TRUE(poisson_bracket(h, h).is_zero());
  EXPECT_THROW(cq().pow(-1), UnsupportedInputError);
}

}  // namespace
}  // namespace kvn::algebra
