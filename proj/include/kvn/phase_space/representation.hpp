#pragma once

#include "kvn/phase_space/state.hpp"

namespace kvn::phase_space {

// psi(q, p) = N exp(-xi^2 / 4 sigma_q^2 - eta^2 / 4 sigma_p^2) with
// (xi, eta) the offsets from the center rotated by `angle`; sigma_q and
// sigma_p are the standard deviations of |psi|^2 along the rotated axes.
struct GaussianParams {
  double q0 = 0.0;
  double p0 = 0.0;
  double sigma_q = 1.0;
  double sigma_p = 1.0;
  double angle = 0.0;
};

inline constexpr double kBoundaryDecay = 1e-12;

// Normalized Gaussian in the requested representation. ConfigError if the
// amplitude on any grid edge exceeds kBoundaryDecay (the message names the
// extent) or if (Q, Qbar) is requested on a misaligned grid.
KvnState init_gaussian(const PhaseSpaceGrid& grid, const GaussianParams& params, Representation rep, double hbar);

// (q,p) <-> (q,lambda_p): psi(q, lambda) = (2 pi)^-1/2 int dp exp(-i lambda p) psi(q, p).
// (q,lambda_p) <-> (Q,Qbar): Q = q - hbar lambda/2, Qbar = q + hbar lambda/2,
// amplitudes scaled by hbar^-1/2 so that the norm is unchanged.
KvnState to_representation(const KvnState& s, Representation target);

}  // namespace kvn::phase_space
