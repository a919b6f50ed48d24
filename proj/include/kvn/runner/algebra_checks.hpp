#pragma once

#include <cstdint>
#include <random>

#include "kvn/algebra/classical_polynomial.hpp"
#include "kvn/algebra/monomial.hpp"
#include "kvn/runner/report.hpp"

namespace kvn::runner {

// [G, H(Q,P)] has degree 2 deg H, which must fit under the product cap.
inline constexpr int kMaxRandomDegree = algebra::kDefaultDegreeCap / 2;

struct VerifyAlgebraOptions {
  int ndof = 3;
  int max_degree = 6;
  std::uint64_t seed = 1;
  int samples = 50;
};

// Random real polynomial in q, p with `terms` monomials of degree <= max_degree
// (at least one of degree exactly max_degree)
// and small rational coefficients. Draws are reduced with %, not with
// std::*_distribution, so the sequence is the same on every standard library.
algebra::ClassicalPolynomial random_polynomial(std::mt19937_64& rng, int ndof, int max_degree, int terms = 6);

// Runs the exact identity suite. ConfigError for ndof outside 1..kMaxDof or
// max_degree outside 1..kMaxRandomDegree. Failing identities are report
// entries; nothing else throws.
RunReport verify_algebra(const VerifyAlgebraOptions& options);

}  // namespace kvn::runner
