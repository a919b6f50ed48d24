#pragma once

#include <complex>

#include <Eigen/Core>

#include "kvn/phase_space/grid.hpp"

namespace kvn::embedding {

// Wave function sampled on n periodic nodes Q_i = q_min + i*dq.
struct QuantumState1D {
  // ContractError for an empty vector or non-positive dq / hbar.
  QuantumState1D(Eigen::VectorXcd amplitudes, double q_min, double dq, double hbar);

  Eigen::VectorXcd amp;
  double q_min;
  double dq;
  double hbar;

  int size() const { return static_cast<int>(amp.size()); }
  double Q(int i) const { return q_min + i * dq; }
  bool same_grid(const QuantumState1D& o) const;
};

// exp(-(Q - q0)^2 / 4 sigma^2 + i p0 Q / hbar) on the q nodes of `grid`,
// normalized. ConfigError if |psi| at either end exceeds 1e-12.
QuantumState1D wavepacket(const phase_space::PhaseSpaceGrid& grid, double hbar, double q0, double p0, double sigma);

// The reference Qbar factor: wavepacket centered at 0 with sigma 1.
QuantumState1D default_chi(const phase_space::PhaseSpaceGrid& grid, double hbar);

double norm_squared(const QuantumState1D& psi);
std::complex<double> inner_product(const QuantumState1D& a, const QuantumState1D& b);
QuantumState1D normalized(const QuantumState1D& psi);
// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const QuantumState1D& a, const QuantumState1D& b);

}  // namespace kvn::embedding
