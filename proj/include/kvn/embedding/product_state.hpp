#pragma once

#include <vector>

#include "kvn/algebra/classical_polynomial.hpp"
#include "kvn/embedding/quantum_state.hpp"
#include "kvn/phase_space/state.hpp"

namespace kvn::embedding {

inline constexpr double kEntanglementThreshold = 1e-6;

// psi(Q) chi(Qbar) in the (Q, Qbar) representation of `grid`. The factors
// must live on the q nodes of the grid with a common hbar, and the grid must
// be shear-aligned for that hbar (ConfigError otherwise).
phase_space::KvnState build_product_state(const QuantumState1D& psi, const QuantumState1D& chi,
                                          const phase_space::PhaseSpaceGrid& grid);
// Same, on aligned_grid(n, q_min, q_min + n*dq, hbar).
phase_space::KvnState build_product_state(const QuantumState1D& psi, const QuantumState1D& chi);

// F(Q^, P^) acting on the Q index only, P^ = -i hbar d/dQ taken spectrally.
// Each monomial q^a p^b is Weyl ordered,
//   2^-a sum_k C(a,k) Q^k P^b Q^(a-k),
// which is the ordering the Bopp map produces.
phase_space::KvnState apply_quantum_observable(const phase_space::KvnState& s, const algebra::ClassicalPolynomial& f);
// Re <s|F|s> / <s|s>.
double quantum_expectation(const phase_space::KvnState& s, const algebra::ClassicalPolynomial& f);

// Singular values of the (Q, Qbar) amplitude matrix, descending, scaled so
// that their squares sum to 1.
std::vector<double> schmidt_spectrum(const phase_space::KvnState& s);

// Dominant left singular vector as a normalized wave function, phase fixed so
// that its largest component is real and positive. EntangledStateError when
// the second Schmidt value exceeds `threshold`.
QuantumState1D extract_q_factor(const phase_space::KvnState& s, double threshold = kEntanglementThreshold);

}  // namespace kvn::embedding
