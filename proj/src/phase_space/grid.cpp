#include "kvn/phase_space/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kvn/errors.hpp"

namespace kvn::phase_space {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_axis(const char* name, int n, double lo, double hi) {
  std::ostringstream err;
  if (n < 8 || !power_of_two(n)) {
    err << "grid: n" << name << " = " << n << " must be a power of two >= 8";
    throw ConfigError(err.str());
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    err << "grid: need " << name << "_min < " << name << "_max, got [" << lo << ", " << hi << "]";
    throw ConfigError(err.str());
  }
}

}  // namespace

PhaseSpaceGrid::PhaseSpaceGrid(int nq, int np, double q_min, double q_max, double p_min, double p_max)
    : nq_(nq), np_(np), q_min_(q_min), q_max_(q_max), p_min_(p_min), p_max_(p_max) {
  check_axis("q", nq, q_min, q_max);
  check_axis("p", np, p_min, p_max);
}

double PhaseSpaceGrid::dlambda_q() const { return 2 * std::numbers::pi / (q_max_ - q_min_); }
double PhaseSpaceGrid::dlambda_p() const { return 2 * std::numbers::pi / (p_max_ - p_min_); }

std::string PhaseSpaceGrid::describe() const {
  std::ostringstream out;
  out.precision(17);
  out << nq_ << "x" << np_ << " q[" << q_min_ << ", " << q_max_ << ") p[" << p_min_ << ", " << p_max_ << ")";
  return out.str();
}

ShearAlignment check_shear_alignment(const PhaseSpaceGrid& grid, double hbar) {
  ShearAlignment out;
  out.ratio = hbar * grid.dlambda_p() / (2 * grid.dq());
  const bool square = grid.nq() == grid.np();
  const bool relation = std::abs(out.ratio - 0.5) <= 1e-9;
  out.aligned = square && relation && hbar > 0;
  if (out.aligned) return out;

  const double lq = grid.q_max() - grid.q_min();
  const double lp_needed = 2 * std::numbers::pi * hbar * grid.nq() / lq;
  const double pc = 0.5 * (grid.p_min() + grid.p_max());
  std::ostringstream msg;
  msg.precision(12);
  msg << "shear alignment violated: the (Q,Qbar) relabeling needs nq == np and hbar*dlambda_p == dq "
      << "(hbar*dlambda_p/(2*dq) = 1/2, i.e. (q_max-q_min)*(p_max-p_min) == 2*pi*hbar*n); got nq=" << grid.nq()
      << ", np=" << grid.np() << ", hbar*dlambda_p/(2*dq) = " << out.ratio << ".";
  if (hbar > 0) {
    out.suggestion = PhaseSpaceGrid(grid.nq(), grid.nq(), grid.q_min(), grid.q_max(), pc - lp_needed / 2,
                                    pc + lp_needed / 2);
    msg << " Nearest valid grid: n = " << grid.nq() << ", keep q range, set p range to [" << pc - lp_needed / 2
        << ", " << pc + lp_needed / 2 << "] (width " << lp_needed << ").";
  }
  out.message = msg.str();
  return out;
}

void require_shear_alignment(const PhaseSpaceGrid& grid, double hbar) {
  const ShearAlignment a = check_shear_alignment(grid, hbar);
  if (!a.aligned) throw ConfigError(a.message);
}

PhaseSpaceGrid aligned_grid(int n, double q_min, double q_max, double hbar, double p_center) {
  if (!(hbar > 0)) throw ConfigError("aligned_grid: hbar must be positive");
  const double lp = 2 * std::numbers::pi * hbar * n / (q_max - q_min);
  return PhaseSpaceGrid(n, n, q_min, q_max, p_center - lp / 2, p_center + lp / 2);
}

}  // namespace kvn::phase_space
