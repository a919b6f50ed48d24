#pragma once

#include "kvn/embedding/quantum_state.hpp"
#include "kvn/phase_space/hamiltonian.hpp"

namespace kvn::embedding {

// Strang split-operator step for i hbar psi_t = -hbar^2/2m psi_QQ + V psi on
// the periodic Q grid. Uses its own FFT (Eigen's kissfft backend), so it
// shares no code with the phase-space propagators.
QuantumState1D schrodinger_oracle_step(const QuantumState1D& psi, const phase_space::HamiltonianSpec& h, double dt);
QuantumState1D schrodinger_oracle_evolve(const QuantumState1D& psi, const phase_space::HamiltonianSpec& h, double dt,
                                         int steps);

}  // namespace kvn::embedding
