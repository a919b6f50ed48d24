#include "kvn/embedding/quantum_state.hpp"

#include <cmath>
#include <sstream>

#include "kvn/errors.hpp"

namespace kvn::embedding {

QuantumState1D::QuantumState1D(Eigen::VectorXcd amplitudes, double q_min_, double dq_, double hbar_)
    : amp(std::move(amplitudes)), q_min(q_min_), dq(dq_), hbar(hbar_) {
  if (amp.size() == 0) throw ContractError("QuantumState1D: empty amplitude vector");
  if (!(dq > 0) || !std::isfinite(dq)) throw ContractError("QuantumState1D: dq must be positive");
  if (!(hbar > 0) || !std::isfinite(hbar)) throw ContractError("QuantumState1D: hbar must be positive");
}

bool QuantumState1D::same_grid(const QuantumState1D& o) const {
  return size() == o.size() && q_min == o.q_min && dq == o.dq && hbar == o.hbar;
}

QuantumState1D wavepacket(const phase_space::PhaseSpaceGrid& grid, double hbar, double q0, double p0, double sigma) {
  if (!(sigma > 0)) throw ConfigError("wavepacket: sigma must be positive");
  const int n = grid.nq();
  Eigen::VectorXcd a(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.q(i) - q0;
    a(i) = std::polar(std::exp(-x * x / (4 * sigma * sigma)), p0 * grid.q(i) / hbar);
  }
  QuantumState1D psi(std::move(a), grid.q_min(), grid.dq(), hbar);
  psi = normalized(psi);
  const double scale = std::abs(psi.amp(0)) / std::exp(-(grid.q(0) - q0) * (grid.q(0) - q0) / (4 * sigma * sigma));
  for (double edge : {grid.q_min(), grid.q_max()}) {
    const double v = scale * std::exp(-(edge - q0) * (edge - q0) / (4 * sigma * sigma));
    if (v > 1e-12) {
      std::ostringstream msg;
      msg << "wavepacket: |psi| = " << v << " at Q = " << edge << " exceeds 1e-12; widen the q range";
      throw ConfigError(msg.str());
    }
  }
  return psi;
}

QuantumState1D default_chi(const phase_space::PhaseSpaceGrid& grid, double hbar) {
  return wavepacket(grid, hbar, 0.0, 0.0, 1.0);
}

double norm_squared(const QuantumState1D& psi) { return psi.amp.squaredNorm() * psi.dq; }

std::complex<double> inner_product(const QuantumState1D& a, const QuantumState1D& b) {
  if (!a.same_grid(b)) throw ContractError("inner_product: wave functions live on different grids");
  return a.amp.dot(b.amp) * a.dq;
}

QuantumState1D normalized(const QuantumState1D& psi) {
  const double n = norm_squared(psi);
  if (!(n > 0)) throw ContractError("normalized: zero wave function");
  QuantumState1D out = psi;
  out.amp /= std::sqrt(n);
  return out;
}

double fidelity(const QuantumState1D& a, const QuantumState1D& b) {
  return std::norm(inner_product(a, b)) / (norm_squared(a) * norm_squared(b));
}

}  // namespace kvn::embedding
