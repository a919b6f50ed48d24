#include <gtest/gtest.h>

#include <random>

#include "kvn/algebra/operator_polynomial.hpp"
#include "kvn/algebra/text.hpp"
#include "kvn/errors.hpp"
#include "word_oracle.hpp"

namespace kvn::algebra {
namespace {

using testing::oracle_adjoint;
using testing::oracle_multiply;
using testing::random_operator;

OperatorPolynomial sym(PhaseIndex idx, int ndof = 1) { return OperatorPolynomial::symbol(ndof, idx); }

TEST(NormalOrder, AlreadyOrderedWordIsUnchanged) {
  EXPECT_EQ(render(sym(PhaseIndex::q()) * sym(PhaseIndex::lq())), "(1)*q*lq");
}

TEST(NormalOrder, SingleSwapPicksUpMinusI) {
  EXPECT_EQ(render(sym(PhaseIndex::lq()) * sym(PhaseIndex::q())), "(-1)*i + (1)*q*lq");
}

TEST(NormalOrder, SquaredPairAgainstOracle) {
  const Monomial a = Monomial::of(PhaseIndex::lq(), 2);
  const Monomial b = Monomial::of(PhaseIndex::q(), 2);
  const OperatorPolynomial got = normal_order_product(a, b, 1);
  const OperatorPolynomial want = testing::normal_order_words(
      {{HbarCoefficient(1), {PhaseIndex::lq(), PhaseIndex::lq(), PhaseIndex::q(), PhaseIndex::q()}}}, 1);
  EXPECT_EQ(got, want);
  EXPECT_EQ(render(got), "(-2) + (-4)*i*q*lq + (1)*q^2*lq^2");
}

TEST(NormalOrder, UnrelatedSymbolsCommute) {
  EXPECT_EQ(sym(PhaseIndex::lp()) * sym(PhaseIndex::q()), sym(PhaseIndex::q()) * sym(PhaseIndex::lp()));
  EXPECT_EQ(sym(PhaseIndex::lq(1), 2) * sym(PhaseIndex::q(0), 2), sym(PhaseIndex::q(0), 2) * sym(PhaseIndex::lq(1), 2));
}

TEST(NormalOrder, DegreeDropsByTwoPerContraction) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const OperatorPolynomial a = random_operator(rng, 2, 4, 1);
    const OperatorPolynomial b = random_operator(rng, 2, 4, 1);
    if (a.is_zero() || b.is_zero()) continue;
    const int top = a.terms().begin()->first.degree() + b.terms().begin()->first.degree();
    const OperatorPolynomial ab = a * b;
    for (const auto& [m, c] : ab.terms()) {
      EXPECT_LE(m.degree(), top);
      EXPECT_EQ((top - m.degree()) % 2, 0);
    }
  }
}

TEST(NormalOrder, RandomProductsMatchWordRewriting) {
  std::mt19937_64 rng(2024);
  for (int ndof = 1; ndof <= 3; ++ndof) {
    for (int t = 0; t < 30; ++t) {
      const OperatorPolynomial a = random_operator(rng, ndof, 4, 3);
      const OperatorPolynomial b = random_operator(rng, ndof, 4, 3);
      ASSERT_EQ(multiply(a, b), oracle_multiply(a, b)) << render(a) << " | " << render(b);
    }
  }
}

TEST(NormalOrder, MismatchedContextsThrow) {
  EXPECT_THROW(sym(PhaseIndex::q(), 1) * sym(PhaseIndex::q(), 2), ContractError);
  EXPECT_THROW(normal_order_product(Monomial::of(PhaseIndex::q(2)), Monomial(), 2), ContractError);
  EXPECT_THROW(OperatorPolynomial::symbol(1, PhaseIndex::p(1)), ContractError);
}

TEST(NormalOrder, DegreeCapOverflow) {
  const Monomial big = Monomial::of(PhaseIndex::q(), 7);
  EXPECT_THROW(normal_order_product(big, big, 1), DegreeOverflowError);
  EXPECT_NO_THROW(normal_order_product(big, big, 1, 14));
}

TEST(Ring, IdentityAndInverse) {
  std::mt19937_64 rng(5);
  const OperatorPolynomial a = random_operator(rng, 2, 4, 5);
  EXPECT_EQ(OperatorPolynomial::identity(2) * a, a);
  EXPECT_EQ(a * OperatorPolynomial::identity(2), a);
  EXPECT_TRUE((a + scale(a, HbarCoefficient(-1))).is_zero());
}

TEST(Ring, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const int ndof = 1 + t % 2;
    const auto a = random_operator(rng, ndof, 3, 2);
    const auto b = random_operator(rng, ndof, 3, 2);
    const auto c = random_operator(rng, ndof, 3, 2);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Commutator, BasicRelations) {
  const HbarCoefficient i(ComplexRational::i());
  EXPECT_TRUE(commutator(sym(PhaseIndex::q()), sym(PhaseIndex::p())).is_zero());
  EXPECT_EQ(commutator(sym(PhaseIndex::q()), sym(PhaseIndex::lq())), OperatorPolynomial::constant(1, i));
  EXPECT_EQ(commutator(sym(PhaseIndex::p()), sym(PhaseIndex::lp())), OperatorPolynomial::constant(1, i));
  EXPECT_TRUE(commutator(sym(PhaseIndex::q()), sym(PhaseIndex::lp())).is_zero());
  EXPECT_TRUE(commutator(sym(PhaseIndex::lq()), sym(PhaseIndex::lp())).is_zero());
}

TEST(Commutator, AntisymmetryBilinearityJacobi) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    const int ndof = 1 + t % 3;
    const auto a = random_operator(rng, ndof, 3, 2);
    const auto b = random_operator(rng, ndof, 3, 2);
    const auto c = random_operator(rng, ndof, 3, 2);
    ASSERT_EQ(commutator(a, b), -commutator(b, a));
    ASSERT_EQ(commutator(a + b, c), commutator(a, c) + commutator(b, c));
    const auto jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b));
    ASSERT_TRUE(jacobi.is_zero()) << render(jacobi);
  }
}

TEST(Adjoint, SpecExample) {
  const auto qlq = sym(PhaseIndex::q()) * sym(PhaseIndex::lq());
  EXPECT_EQ(render(hermitian_conjugate(qlq)), "(-1)*i + (1)*q*lq");
  EXPECT_EQ(hermitian_conjugate(qlq), oracle_adjoint(qlq));
}

TEST(Adjoint, InvolutionAndReversal) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const int ndof = 1 + t % 2;
    const auto a = random_operator(rng, ndof, 4, 3);
    const auto b = random_operator(rng, ndof, 3, 2);
    ASSERT_EQ(hermitian_conjugate(a), oracle_adjoint(a));
    ASSERT_EQ(hermitian_conjugate(hermitian_conjugate(a)), a);
    ASSERT_EQ(hermitian_conjugate(a * b), hermitian_conjugate(b) * hermitian_conjugate(a));
  }
}

TEST(Hbar, SubstituteAndDivide) {
  const OperatorPolynomial i_hbar = OperatorPolynomial::constant(1, HbarCoefficient(ComplexRational::i(), 1));
  EXPECT_EQ(substitute_hbar(i_hbar, 1), OperatorPolynomial::constant(1, HbarCoefficient(ComplexRational::i())));
  EXPECT_EQ(divide_by_hbar(i_hbar), OperatorPolynomial::constant(1, HbarCoefficient(ComplexRational::i())));
  EXPECT_THROW(divide_by_hbar(OperatorPolynomial::identity(1)), ContractError);
}

}  // namespace
}  // namespace kvn::algebra
