#include "kvn/phase_space/propagator.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "kvn/errors.hpp"
#include "kvn/phase_space/fft.hpp"

namespace kvn::phase_space {

std::string_view to_string(Generator g) { return g == Generator::kLiouville ? "liouville" : "moyal"; }

Generator parse_generator(std::string_view text) {
  if (text == "liouville") return Generator::kLiouville;
  if (text == "moyal") return Generator::kMoyal;
  throw ConfigError("unknown generator '" + std::string(text) + "' (expected liouville | moyal)");
}

namespace {

// Potential multiplier on (q_i, kappa_p m) for a sub-step of length tau.
Eigen::ArrayXXcd potential_multiplier(const PhaseSpaceGrid& g, const HamiltonianSpec& h, Generator gen,
                                      double hbar, double tau) {
  Eigen::ArrayXXcd m(g.nq(), g.np());
  const double norm = 1.0 / g.np();
  for (int k = 0; k < g.np(); ++k) {
    const double kappa = g.kappa_p(k);
    for (int i = 0; i < g.nq(); ++i) {
      const double q = g.q(i);
      double phase;
      if (gen == Generator::kLiouville) {
        phase = kappa * h.dV(q) * tau;
      } else {
        const double a = hbar * kappa / 2;
        phase = -tau * (h.V(q - a) - h.V(q + a)) / hbar;
      }
      m(i, k) = std::polar(norm, phase);
    }
  }
  return m;
}

}  // namespace

SplitStepPropagator::SplitStepPropagator(const PhaseSpaceGrid& grid, const HamiltonianSpec& h, double dt,
                                         Generator generator, double hbar)
    : grid_(grid), generator_(generator), dt_(dt), hbar_(hbar) {
  if (!(dt > 0) || !std::isfinite(dt)) throw ContractError("propagator: dt must be positive");
  if (!(hbar > 0) || !std::isfinite(hbar)) throw ContractError("propagator: hbar must be positive");
  half_potential_ = potential_multiplier(grid, h, generator, hbar, dt / 2);
  full_potential_ = potential_multiplier(grid, h, generator, hbar, dt);
  kinetic_.resize(grid.nq(), grid.np());
  const double norm = 1.0 / grid.nq();
  for (int j = 0; j < grid.np(); ++j)
    for (int m = 0; m < grid.nq(); ++m)
      kinetic_(m, j) = std::polar(norm, -grid.kappa_q(m) * grid.p(j) * dt / h.mass());
}

void SplitStepPropagator::check(const KvnState& s) const {
  require_representation(s, Representation::kQP, "propagator");
  if (!(s.grid == grid_)) throw ContractError("propagator: state grid differs from the propagator grid");
  if (generator_ == Generator::kMoyal && s.hbar != hbar_)
    throw ContractError("moyal propagator: state hbar " + std::to_string(s.hbar) + " differs from generator hbar " +
                        std::to_string(hbar_));
}

void SplitStepPropagator::evolve_in_place(Eigen::MatrixXcd& a, int steps) const {
  if (steps < 0) throw ContractError("propagator: negative step count");
  if (a.rows() != grid_.nq() || a.cols() != grid_.np()) throw ContractError("propagator: amplitude shape mismatch");
  if (steps == 0) return;
  fft_along_p(a, -1);
  a.array() *= half_potential_;
  fft_along_p(a, +1);
  for (int s = 0; s < steps; ++s) {
    fft_along_q(a, -1);
    a.array() *= kinetic_;
    fft_along_q(a, +1);
    fft_along_p(a, -1);
    a.array() *= (s + 1 == steps ? half_potential_ : full_potential_);
    fft_along_p(a, +1);
  }
}

KvnState SplitStepPropagator::evolve(const KvnState& s, int steps) const {
  check(s);
  KvnState out = s;
  evolve_in_place(out.amp, steps);
  return out;
}

KvnState liouville_step(const KvnState& s, const HamiltonianSpec& h, double dt) {
  return SplitStepPropagator(s.grid, h, dt, Generator::kLiouville, s.hbar).step(s);
}

KvnState moyal_step(const KvnState& s, const HamiltonianSpec& h, double dt, double hbar) {
  if (s.hbar != hbar)
    throw ContractError("moyal_step: state hbar " + std::to_string(s.hbar) + " differs from " + std::to_string(hbar));
  return SplitStepPropagator(s.grid, h, dt, Generator::kMoyal, hbar).step(s);
}

}  // namespace kvn::phase_space
