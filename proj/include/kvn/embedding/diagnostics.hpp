#pragma once

#include <filesystem>
#include <vector>

#include "kvn/algebra/classical_polynomial.hpp"
#include "kvn/embedding/quantum_state.hpp"
#include "kvn/phase_space/hamiltonian.hpp"
#include "kvn/phase_space/propagator.hpp"
#include "kvn/phase_space/state.hpp"

namespace kvn::embedding {

inline constexpr double kRedundancyTolerance = 1e-10;
inline constexpr double kMomentumRouteTolerance = 1e-8;
inline constexpr double kParsevalTolerance = 1e-12;

struct ObservableComparison {
  algebra::ClassicalPolynomial f;
  double with_chi;
  double with_sigma;
};

struct RedundancyReport {
  std::vector<ObservableComparison> quantum;
  double max_quantum_difference = 0.0;
  // |<psi chi|psi sigma>| and the L2 distance between the two KvN vectors.
  double kvn_overlap = 0.0;
  double kvn_distance = 0.0;
  // Classical q expectation on both states; generally different.
  double classical_q_with_chi = 0.0;
  double classical_q_with_sigma = 0.0;
  bool passed = false;
};

// Compares psi*chi against psi*sigma. ContractError if chi and sigma are the
// same state (fidelity 1 to 1e-12).
RedundancyReport redundancy_check(const QuantumState1D& psi, const QuantumState1D& chi, const QuantumState1D& sigma,
                                  const std::vector<algebra::ClassicalPolynomial>& observables);

struct EnergyTrace {
  std::vector<double> times;
  std::vector<double> values;
  phase_space::Generator generator;

  // max_t |E(t) - E(0)| / |E(0)|.
  double relative_drift() const;
};

// Evolves `initial` (any representation; the result is evolved in (q, p))
// and records <H(Q^, P^)> at t = 0 and after every `sample_every` steps.
// The grid must be shear-aligned for initial.hbar.
EnergyTrace energy_trace(const phase_space::KvnState& initial, const phase_space::HamiltonianSpec& h,
                         phase_space::Generator generator, double dt, int steps, int sample_every = 1);

struct MomentumRouteReport {
  double via_q = 0.0;  // <F> from the (Q, Qbar) state
  double via_p = 0.0;  // <F> from the momentum-space factor, Q^ = i hbar d/dP
  double norm_q = 0.0;
  double norm_p = 0.0;
  bool passed = false;
};

// Extracts the Q factor, Fourier transforms it to phi(P) and evaluates the
// Weyl-ordered F there; compares with the (Q, Qbar) route.
MomentumRouteReport momentum_representation_check(const phase_space::KvnState& s,
                                                  const algebra::ClassicalPolynomial& f);

// "t,value" and "k,sigma_k" with %.17g values.
void write_energy_trace_csv(const EnergyTrace& trace, const std::filesystem::path& path);
void write_schmidt_csv(const std::vector<double>& spectrum, const std::filesystem::path& path);

}  // namespace kvn::embedding
