#pragma once

#include <optional>
#include <string>

namespace kvn::phase_space {

// Periodic nq x np grid over [q_min, q_max) x [p_min, p_max). Node i sits at
// q_min + i*dq; q_max itself is identified with q_min.
//
// Dual axes: centered lambda_k = (k - n/2) * dlambda with dlambda = 2 pi / L,
// and natural-order FFT wavenumbers kappa_m = m * dlambda for m < n/2,
// (m - n) * dlambda otherwise. Both index the same set of frequencies.
class PhaseSpaceGrid {
 public:
  // ConfigError unless nq, np are powers of two >= 8 and the extents are
  // finite and strictly ordered.
  PhaseSpaceGrid(int nq, int np, double q_min, double q_max, double p_min, double p_max);

  int nq() const { return nq_; }
  int np() const { return np_; }
  double q_min() const { return q_min_; }
  double q_max() const { return q_max_; }
  double p_min() const { return p_min_; }
  double p_max() const { return p_max_; }

  double dq() const { return (q_max_ - q_min_) / nq_; }
  double dp() const { return (p_max_ - p_min_) / np_; }
  double dlambda_q() const;
  double dlambda_p() const;

  double q(int i) const { return q_min_ + i * dq(); }
  double p(int j) const { return p_min_ + j * dp(); }
  double lambda_q(int k) const { return (k - nq_ / 2) * dlambda_q(); }
  double lambda_p(int k) const { return (k - np_ / 2) * dlambda_p(); }
  double kappa_q(int m) const { return (m < nq_ / 2 ? m : m - nq_) * dlambda_q(); }
  double kappa_p(int m) const { return (m < np_ / 2 ? m : m - np_) * dlambda_p(); }

  std::string describe() const;

  friend bool operator==(const PhaseSpaceGrid&, const PhaseSpaceGrid&) = default;

 private:
  int nq_;
  int np_;
  double q_min_;
  double q_max_;
  double p_min_;
  double p_max_;
};

// The (Q, Qbar) relabeling is an exact permutation (plus a half-cell spectral
// shift on odd lambda columns) only when nq == np and hbar * dlambda_p == dq,
// equivalently (q_max - q_min) * (p_max - p_min) == 2 pi hbar n.
struct ShearAlignment {
  bool aligned = false;
  double ratio = 0.0;  // hbar * dlambda_p / (2 dq); 1/2 when aligned
  std::string message;
  std::optional<PhaseSpaceGrid> suggestion;
};

ShearAlignment check_shear_alignment(const PhaseSpaceGrid& grid, double hbar);
// Throws ConfigError carrying check_shear_alignment's message.
void require_shear_alignment(const PhaseSpaceGrid& grid, double hbar);

// n x n grid on [q_min, q_max) with the p extent chosen to satisfy the
// alignment relation, centered on p_center.
PhaseSpaceGrid aligned_grid(int n, double q_min, double q_max, double hbar, double p_center = 0.0);

}  // namespace kvn::phase_space
