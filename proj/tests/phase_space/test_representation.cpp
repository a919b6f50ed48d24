#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "kvn/errors.hpp"
#include "kvn/phase_space/representation.hpp"

namespace kvn::phase_space {
namespace {

using cd = std::complex<double>;

TEST(Representation, FourierRoundTrip) {
  const PhaseSpaceGrid g(64, 128, -12, 12, -14, 10);
  const KvnState s = init_gaussian(g, {1, -2, 0.7, 0.9, 0.4}, Representation::kQP, 1.0);
  const KvnState l = to_representation(s, Representation::kQLambdaP);
  EXPECT_EQ(l.rep, Representation::kQLambdaP);
  EXPECT_NEAR(norm_squared(l), 1.0, 1e-13);
  const KvnState back = to_representation(l, Representation::kQP);
  EXPECT_LT(max_abs_difference(back, s), 1e-12);
}

// psi(q, p) = f(q) g(p) exp(i lambda0 p) with g Gaussian around p0 maps to
// f(q) sqrt(2) sigma exp(-i (lambda - lambda0) p0) exp(-sigma^2 (lambda - lambda0)^2).
TEST(Representation, ShiftTheoremFixesTheKernelSign) {
  const PhaseSpaceGrid g(16, 256, -4, 4, -12, 12);
  const double p0 = 1.25;
  const double sigma = 0.8;
  const double lambda0 = 3 * g.dlambda_p();
  Eigen::MatrixXcd a(16, 256);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 256; ++j) {
      const double p = g.p(j);
      a(i, j) = std::exp(-g.q(i) * g.q(i)) * std::exp(-(p - p0) * (p - p0) / (4 * sigma * sigma)) *
                std::polar(1.0, lambda0 * p);
    }
  const KvnState l = to_representation(KvnState(Representation::kQP, a, g, 1.0), Representation::kQLambdaP);
  double err = 0.0;
  for (int i = 0; i < 16; ++i)
    for (int k = 0; k < 256; ++k) {
      const double x = g.lambda_p(k) - lambda0;
      const cd want = std::exp(-g.q(i) * g.q(i)) * std::sqrt(2.0) * sigma * std::polar(1.0, -x * p0) *
                      std::exp(-sigma * sigma * x * x);
      err = std::max(err, std::abs(l.amp(i, k) - want));
    }
  EXPECT_LT(err, 1e-12);
}

TEST(Representation, QQbarRoundTripIsExact) {
  for (double hbar : {1.0, 0.25}) {
    const PhaseSpaceGrid g = aligned_grid(128, -10, 10, hbar);
    const KvnState s = init_gaussian(g, {0.5, 0.3, 0.8, 0.4, 0.2}, Representation::kQP, hbar);
    const KvnState qq = to_representation(s, Representation::kQQbar);
    EXPECT_NEAR(norm_squared(qq), 1.0, 1e-13);
    EXPECT_LT(max_abs_difference(to_representation(qq, Representation::kQP), s), 1e-12);
    const KvnState l = to_representation(s, Representation::kQLambdaP);
    EXPECT_LT(max_abs_difference(to_representation(to_representation(l, Representation::kQQbar),
                                                   Representation::kQLambdaP),
                                 l),
              1e-12);
  }
}

TEST(Representation, QQbarNeedsAlignment) {
  const PhaseSpaceGrid g(64, 64, -8, 8, -8, 8);
  const KvnState s = init_gaussian(g, {0, 0, 0.6, 0.6, 0}, Representation::kQP, 1.0);
  EXPECT_THROW(to_representation(s, Representation::kQQbar), ConfigError);
  EXPECT_THROW(init_gaussian(g, {0, 0, 1, 1, 0}, Representation::kQQbar, 1.0), ConfigError);
}

// A product psi(Q) chi(Qbar) seen from (q, lambda_p) is
// sqrt(hbar) psi(q - hbar lambda/2) chi(q + hbar lambda/2).
TEST(Representation, QQbarCoordinatesMatchTheRelabeling) {
  const double hbar = 0.5;
  const PhaseSpaceGrid g = aligned_grid(128, -10, 10, hbar);
  auto psi = [](double x) { return std::exp(-2 * (x - 1) * (x - 1)) * std::polar(1.0, 0.7 * x); };
  auto chi = [](double x) { return std::exp(-(x + 0.5) * (x + 0.5)); };
  Eigen::MatrixXcd n(128, 128);
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 128; ++j) n(i, j) = psi(g.q(i)) * chi(g.q(j));
  const KvnState l = to_representation(KvnState(Representation::kQQbar, n, g, hbar), Representation::kQLambdaP);
  double err = 0.0;
  for (int i = 0; i < 128; ++i)
    for (int k = 0; k < 128; ++k) {
      const double shift = hbar * g.lambda_p(k) / 2;
      const cd want = std::sqrt(hbar) * psi(g.q(i) - shift) * chi(g.q(i) + shift);
      err = std::max(err, std::abs(l.amp(i, k) - want));
    }
  EXPECT_LT(err, 1e-10);
}

}  // namespace
}  // namespace kvn::phase_space
