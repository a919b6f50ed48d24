#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "kvn/phase_space/grid.hpp"

namespace kvn::phase_space {

// (q, p): both axes as on the grid.
// (q, lambda_p): rows q, columns centered lambda_p.
// (Q, Qbar): rows Q, columns Qbar, both on the q nodes.
enum class Representation { kQP = 0, kQLambdaP = 1, kQQbar = 2 };

std::string_view to_string(Representation r);
// Accepts "q,p", "q,lambda_p", "Q,Qbar". ConfigError otherwise.
Representation parse_representation(std::string_view text);

// Amplitudes are nq x np, rows indexing the first coordinate.
struct KvnState {
  KvnState(Representation rep, Eigen::MatrixXcd amplitudes, PhaseSpaceGrid grid, double hbar);

  Representation rep;
  Eigen::MatrixXcd amp;
  PhaseSpaceGrid grid;
  double hbar;

  // Measure of one grid cell in the current representation.
  double cell_area() const;
};

double norm_squared(const KvnState& s);
// <a|b>; both states must share representation, grid and hbar.
std::complex<double> inner_product(const KvnState& a, const KvnState& b);
double max_abs_difference(const KvnState& a, const KvnState& b);
double l2_difference(const KvnState& a, const KvnState& b);

// Throws RepresentationError if s is not in the expected representation.
void require_representation(const KvnState& s, Representation expected, std::string_view op);

}  // namespace kvn::phase_space
