#pragma once

#include "kvn/phase_space/hamiltonian.hpp"
#include "kvn/phase_space/state.hpp"

namespace kvn::phase_space {

struct CharacteristicsResult {
  KvnState state;
  // Fraction of nodes whose backward trajectory ends inside the grid. The
  // others are set to zero.
  double coverage;
  long flagged;
};

// Reference solution of the Liouville equation: psi(phi, t) = psi(flow_-t(phi), 0).
// Trajectories are integrated backward with velocity Verlet (step at most
// dt_oracle) and psi_0 is sampled by bicubic Hermite interpolation with
// spectrally computed node derivatives. Oracle only; the propagators never
// call this.
CharacteristicsResult characteristics_oracle(const KvnState& s, const HamiltonianSpec& h, double t,
                                             double dt_oracle = 1e-4);

}  // namespace kvn::phase_space
