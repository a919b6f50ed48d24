#pragma once

#include <cstdint>

#include "kvn/algebra/classical_polynomial.hpp"
#include "kvn/phase_space/state.hpp"

namespace kvn::phase_space {

// int f(q, p) |psi(q, p)|^2 dq dp by the rectangle rule (spectrally accurate
// for smooth periodic integrands).
double expectation_classical(const KvnState& s, const algebra::ClassicalPolynomial& f);

// Multiplies psi pointwise by exp(i theta) with theta drawn from a
// mt19937_64 stream seeded with `seed`, one draw per node in column-major
// order.
KvnState phase_scramble(const KvnState& s, std::uint64_t seed);

}  // namespace kvn::phase_space
