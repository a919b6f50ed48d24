#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kvn/errors.hpp"
#include "kvn/phase_space/characteristics.hpp"
#include "kvn/phase_space/propagator.hpp"
#include "kvn/phase_space/representation.hpp"

namespace kvn::phase_space {
namespace {

using algebra::ClassicalPolynomial;
using algebra::Rational;

HamiltonianSpec quartic() { return HamiltonianSpec(ClassicalPolynomial::q().pow(4) * Rational(1, 4)); }

// Normalized Gaussian amplitude with the same convention as init_gaussian (no rotation).
double gauss(double q, double p, double q0, double p0, double sq, double sp) {
  return std::exp(-(q - q0) * (q - q0) / (4 * sq * sq) - (p - p0) * (p - p0) / (4 * sp * sp)) /
         std::sqrt(2 * std::numbers::pi * sq * sp);
}

TEST(Hamiltonian, Validation) {
  EXPECT_THROW(HamiltonianSpec(ClassicalPolynomial::p()), UnsupportedInputError);
  EXPECT_THROW(HamiltonianSpec(ClassicalPolynomial::q().pow(9)), UnsupportedInputError);
  EXPECT_THROW(HamiltonianSpec(ClassicalPolynomial::q(), 0.0), ContractError);
  const HamiltonianSpec h(ClassicalPolynomial::q().pow(3) * Rational(2) - ClassicalPolynomial::q(), 2.0);
  EXPECT_DOUBLE_EQ(h.V(2.0), 14.0);
  EXPECT_DOUBLE_EQ(h.dV(2.0), 23.0);
  EXPECT_DOUBLE_EQ(h.energy(1.0, 2.0), 2.0);
  EXPECT_DOUBLE_EQ(HamiltonianSpec::harmonic(2.0, 0.5).V(1.0), 1.0);
}

TEST(Liouville, FreeTransportIsExact) {
  const PhaseSpaceGrid g(128, 64, -10, 10, -6, 6);
  const HamiltonianSpec free(ClassicalPolynomial(1), 1.5);
  const KvnState s = init_gaussian(g, {-2, 0.5, 0.6, 0.4, 0}, Representation::kQP, 1.0);
  const double t = 2.0;
  const KvnState out = liouville_step(s, free, t);
  double err = 0.0;
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 64; ++j) {
      const double want = gauss(g.q(i) - g.p(j) * t / 1.5, g.p(j), -2, 0.5, 0.6, 0.4);
      err = std::max(err, std::abs(out.amp(i, j) - want));
    }
  EXPECT_LT(err, 1e-10);
}

TEST(Liouville, NormDriftPerStep) {
  const PhaseSpaceGrid g(128, 128, -8, 8, -8, 8);
  const KvnState s = init_gaussian(g, {1, 0, 0.5, 0.5, 0}, Representation::kQP, 1.0);
  KvnState cur = s;
  const SplitStepPropagator prop(g, quartic(), 1e-2, Generator::kLiouville);
  for (int k = 0; k < 20; ++k) {
    KvnState next = prop.step(cur);
    EXPECT_LT(std::abs(norm_squared(next) - norm_squared(cur)), 1e-13);
    cur = std::move(next);
  }
  EXPECT_THROW(prop.step(to_representation(s, Representation::kQLambdaP)), RepresentationError);
}

TEST(Liouville, FusedStepsEqualRepeatedSteps) {
  const PhaseSpaceGrid g(64, 64, -8, 8, -8, 8);
  const KvnState s = init_gaussian(g, {1, 0, 0.6, 0.6, 0}, Representation::kQP, 1.0);
  const SplitStepPropagator prop(g, quartic(), 5e-3, Generator::kLiouville);
  KvnState cur = s;
  for (int k = 0; k < 10; ++k) cur = prop.step(cur);
  EXPECT_LT(max_abs_difference(cur, prop.evolve(s, 10)), 1e-13);
}

TEST(Moyal, QuadraticPotentialMatchesLiouville) {
  const PhaseSpaceGrid g(128, 128, -8, 8, -8, 8);
  const HamiltonianSpec h(ClassicalPolynomial::q().pow(2) * Rational(3, 2) - ClassicalPolynomial::q(), 0.8);
  const KvnState s = init_gaussian(g, {1, 0.5, 0.5, 0.6, 0.3}, Representation::kQP, 0.7);
  EXPECT_LT(max_abs_difference(moyal_step(s, h, 0.01, 0.7), liouville_step(s, h, 0.01)), 1e-12);
  const HamiltonianSpec free(ClassicalPolynomial(1));
  EXPECT_LT(max_abs_difference(moyal_step(s, free, 0.3, 0.7), liouville_step(s, free, 0.3)), 1e-14);
  EXPECT_THROW(moyal_step(s, h, 0.01, 1.0), ContractError);
}

TEST(Moyal, NormDriftPerStep) {
  const PhaseSpaceGrid g(128, 128, -8, 8, -8, 8);
  const KvnState s = init_gaussian(g, {1, 0, 0.5, 0.5, 0}, Representation::kQP, 1.0);
  const KvnState out = moyal_step(s, quartic(), 1e-3, 1.0);
  EXPECT_LT(std::abs(norm_squared(out) - 1.0), 1e-13);
}

// A single step differs from the Liouville step by O(hbar^2).
TEST(Moyal, DepartureFromLiouvilleScalesAsHbarSquared) {
  const PhaseSpaceGrid g(128, 128, -8, 8, -8, 8);
  std::vector<double> x;
  std::vector<double> y;
  for (double hbar : {0.1, 0.2, 0.4}) {
    const KvnState s = init_gaussian(g, {1, 0, 0.5, 0.5, 0}, Representation::kQP, hbar);
    const double d = max_abs_difference(moyal_step(s, quartic(), 0.05, hbar), liouville_step(s, quartic(), 0.05));
    x.push_back(std::log(hbar));
    y.push_back(std::log(d));
  }
  const double slope1 = (y[1] - y[0]) / (x[1] - x[0]);
  const double slope2 = (y[2] - y[1]) / (x[2] - x[1]);
  EXPECT_GT(slope1, 1.8);
  EXPECT_LT(slope1, 2.2);
  EXPECT_GT(slope2, 1.8);
  EXPECT_LT(slope2, 2.2);
}

TEST(Characteristics, FreeTransport) {
  const PhaseSpaceGrid g(256, 64, -10, 10, -6, 6);
  const HamiltonianSpec free(ClassicalPolynomial(1));
  const KvnState s = init_gaussian(g, {-2, 0.5, 0.6, 0.4, 0}, Representation::kQP, 1.0);
  const CharacteristicsResult r = characteristics_oracle(s, free, 1.5, 0.1);
  EXPECT_DOUBLE_EQ(r.coverage, 1.0 - static_cast<double>(r.flagged) / (256 * 64));
  double err = 0.0;
  for (int i = 0; i < 256; ++i)
    for (int j = 0; j < 64; ++j) {
      const double q0 = g.q(i) - g.p(j) * 1.5;
      if (q0 < g.q_min()) continue;
      err = std::max(err, std::abs(r.state.amp(i, j) - gauss(q0, g.p(j), -2, 0.5, 0.6, 0.4)));
    }
  EXPECT_LT(err, 1e-6);
  EXPECT_LT(r.coverage, 1.0);
}

TEST(Characteristics, HarmonicQuarterPeriodRotates) {
  const PhaseSpaceGrid g(256, 256, -12, 12, -12, 12);
  const double omega = 2.0;
  const HamiltonianSpec h = HamiltonianSpec::harmonic(omega);
  // sigma_p = m omega sigma_q keeps the shape invariant under the flow.
  const KvnState s = init_gaussian(g, {2, 0, 0.5, 1.0, 0}, Representation::kQP, 1.0);
  const double t = std::numbers::pi / (2 * omega);
  const CharacteristicsResult r = characteristics_oracle(s, h, t, 1e-4);
  // Corners of the box flow in from outside it; the Gaussian is negligible there.
  EXPECT_LT(r.coverage, 1.0);
  // (q0, p0) = (2, 0) moves to (2 cos wt, -2 m w sin wt) = (0, -4).
  double err = 0.0;
  for (int i = 0; i < 256; ++i)
    for (int j = 0; j < 256; ++j)
      err = std::max(err, std::abs(r.state.amp(i, j) - gauss(g.q(i), g.p(j), 0, -4, 0.5, 1.0)));
  EXPECT_LT(err, 1e-5);
}

}  // namespace
}  // namespace kvn::phase_space
