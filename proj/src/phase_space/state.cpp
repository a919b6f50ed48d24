#include "kvn/phase_space/state.hpp"

#include <cmath>
#include <string>

#include "kvn/errors.hpp"

namespace kvn::phase_space {

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::kQP: return "q,p";
    case Representation::kQLambdaP: return "q,lambda_p";
    case Representation::kQQbar: return "Q,Qbar";
  }
  return "?";
}

Representation parse_representation(std::string_view text) {
  for (auto r : {Representation::kQP, Representation::kQLambdaP, Representation::kQQbar})
    if (text == to_string(r)) return r;
  throw ConfigError("unknown representation '" + std::string(text) + "' (expected q,p | q,lambda_p | Q,Qbar)");
}

KvnState::KvnState(Representation rep_, Eigen::MatrixXcd amplitudes, PhaseSpaceGrid grid_, double hbar_)
    : rep(rep_), amp(std::move(amplitudes)), grid(grid_), hbar(hbar_) {
  if (amp.rows() != grid.nq() || amp.cols() != grid.np())
    throw ContractError("KvnState: amplitude shape does not match the grid");
  if (!(hbar > 0) || !std::isfinite(hbar)) throw ContractError("KvnState: hbar must be positive");
}

double KvnState::cell_area() const {
  switch (rep) {
    case Representation::kQP: return grid.dq() * grid.dp();
    case Representation::kQLambdaP: return grid.dq() * grid.dlambda_p();
    case Representation::kQQbar: return grid.dq() * grid.dq();
  }
  return 0.0;
}

double norm_squared(const KvnState& s) { return s.amp.squaredNorm() * s.cell_area(); }

namespace {

void check_compatible(const KvnState& a, const KvnState& b, const char* op) {
  if (a.rep != b.rep || !(a.grid == b.grid) || a.hbar != b.hbar)
    throw ContractError(std::string(op) + ": states differ in representation, grid or hbar");
}

}  // namespace

std::complex<double> inner_product(const KvnState& a, const KvnState& b) {
  check_compatible(a, b, "inner_product");
  return (a.amp.conjugate().cwiseProduct(b.amp)).sum() * a.cell_area();
}

double max_abs_difference(const KvnState& a, const KvnState& b) {
  check_compatible(a, b, "max_abs_difference");
  return (a.amp - b.amp).cwiseAbs().maxCoeff();
}

double l2_difference(const KvnState& a, const KvnState& b) {
  check_compatible(a, b, "l2_difference");
  return std::sqrt((a.amp - b.amp).squaredNorm() * a.cell_area());
}

void require_representation(const KvnState& s, Representation expected, std::string_view op) {
  if (s.rep != expected)
    throw RepresentationError(std::string(op) + ": expected the " + std::string(to_string(expected)) +
                              " representation, got " + std::string(to_string(s.rep)));
}

}  // namespace kvn::phase_space
