#pragma once

#include <string_view>

#include <Eigen/Core>

#include "kvn/phase_space/hamiltonian.hpp"
#include "kvn/phase_space/state.hpp"

namespace kvn::phase_space {

enum class Generator { kLiouville, kMoyal };

std::string_view to_string(Generator g);
Generator parse_generator(std::string_view text);

// Strang splitting V/2 - K - V/2 in the (q, p) representation. Both pieces
// are diagonal in a mixed Fourier basis:
//   potential, in (q, kappa_p):  Liouville  exp(i kappa V'(q) tau)
//                                Moyal      exp(-i tau [V(q - hbar kappa/2) - V(q + hbar kappa/2)] / hbar)
//   kinetic,   in (kappa_q, p):  exp(-i kappa p tau / m)
// Multipliers are built once; evolve() fuses adjacent potential halves.
class SplitStepPropagator {
 public:
  SplitStepPropagator(const PhaseSpaceGrid& grid, const HamiltonianSpec& h, double dt, Generator generator,
                      double hbar = 1.0);

  const PhaseSpaceGrid& grid() const { return grid_; }
  Generator generator() const { return generator_; }
  double dt() const { return dt_; }
  double hbar() const { return hbar_; }

  KvnState step(const KvnState& s) const { return evolve(s, 1); }
  KvnState evolve(const KvnState& s, int steps) const;
  // Same as evolve on a bare (q, p) amplitude matrix.
  void evolve_in_place(Eigen::MatrixXcd& amp, int steps) const;

 private:
  void check(const KvnState& s) const;

  PhaseSpaceGrid grid_;
  Generator generator_;
  double dt_;
  double hbar_;
  // 1/n normalizations folded in.
  Eigen::ArrayXXcd half_potential_;
  Eigen::ArrayXXcd full_potential_;
  Eigen::ArrayXXcd kinetic_;
};

// One Strang step under the Liouvillian.
KvnState liouville_step(const KvnState& s, const HamiltonianSpec& h, double dt);
// One Strang step under the Moyal generator; hbar must match s.hbar.
KvnState moyal_step(const KvnState& s, const HamiltonianSpec& h, double dt, double hbar);

}  // namespace kvn::phase_space
