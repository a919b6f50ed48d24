#include "kvn/embedding/schrodinger.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "kvn/errors.hpp"

namespace kvn::embedding {

namespace {

class SplitOperator {
 public:
  SplitOperator(const QuantumState1D& psi, const phase_space::HamiltonianSpec& h, double dt) {
    if (!(dt > 0) || !std::isfinite(dt)) throw ContractError("schrodinger oracle: dt must be positive");
    const int n = psi.size();
    const double L = n * psi.dq;
    half_v_.resize(n);
    kin_.resize(n);
    for (int i = 0; i < n; ++i) {
      half_v_(i) = std::polar(1.0, -h.V(psi.Q(i)) * dt / (2 * psi.hbar));
      const int m = i < n / 2 ? i : i - n;
      const double k = 2 * std::numbers::pi * m / L;
      kin_(i) = std::polar(1.0, -psi.hbar * k * k * dt / (2 * h.mass()));
    }
  }

  void step(Eigen::VectorXcd& a) {
    a.array() *= half_v_.array();
    fft_.fwd(spec_, a);
    spec_.array() *= kin_.array();
    fft_.inv(a, spec_);
    a.array() *= half_v_.array();
  }

 private:
  Eigen::FFT<double> fft_;
  Eigen::VectorXcd half_v_;
  Eigen::VectorXcd kin_;
  Eigen::VectorXcd spec_;
};

}  // namespace

QuantumState1D schrodinger_oracle_step(const QuantumState1D& psi, const phase_space::HamiltonianSpec& h, double dt) {
  return schrodinger_oracle_evolve(psi, h, dt, 1);
}

QuantumState1D schrodinger_oracle_evolve(const QuantumState1D& psi, const phase_space::HamiltonianSpec& h, double dt,
                                         int steps) {
  if (steps < 0) throw ContractError("schrodinger oracle: negative step count");
  SplitOperator op(psi, h, dt);
  QuantumState1D out = psi;
  for (int s = 0; s < steps; ++s) op.step(out.amp);
  return out;
}

}  // namespace kvn::embedding
