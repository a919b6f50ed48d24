#include "kvn/phase_space/representation.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "kvn/errors.hpp"
#include "kvn/phase_space/fft.hpp"

namespace kvn::phase_space {

namespace {

using cd = std::complex<double>;

double gaussian(const GaussianParams& g, double q, double p) {
  const double c = std::cos(g.angle);
  const double s = std::sin(g.angle);
  const double dq = q - g.q0;
  const double dp = p - g.p0;
  const double xi = c * dq + s * dp;
  const double eta = -s * dq + c * dp;
  const double norm = 1.0 / std::sqrt(2 * std::numbers::pi * g.sigma_q * g.sigma_p);
  return norm * std::exp(-xi * xi / (4 * g.sigma_q * g.sigma_q) - eta * eta / (4 * g.sigma_p * g.sigma_p));
}

void check_decay(const PhaseSpaceGrid& grid, const GaussianParams& g) {
  struct Edge {
    const char* name;
    bool q_fixed;
    double value;
  };
  const Edge edges[] = {{"q_min", true, grid.q_min()},
                        {"q_max", true, grid.q_max()},
                        {"p_min", false, grid.p_min()},
                        {"p_max", false, grid.p_max()}};
  for (const Edge& e : edges) {
    double worst = 0.0;
    const int n = e.q_fixed ? grid.np() : grid.nq();
    for (int k = 0; k < n; ++k) {
      const double a = e.q_fixed ? gaussian(g, e.value, grid.p(k)) : gaussian(g, grid.q(k), e.value);
      worst = std::max(worst, a);
    }
    if (worst > kBoundaryDecay) {
      std::ostringstream msg;
      msg << "init_gaussian: amplitude " << worst << " at " << e.name << " = " << e.value << " exceeds "
          << kBoundaryDecay << "; widen the grid along " << (e.q_fixed ? "q" : "p")
          << " or narrow/recentre the Gaussian";
      throw ConfigError(msg.str());
    }
  }
}

KvnState qp_to_qlambda(const KvnState& s) {
  const PhaseSpaceGrid& g = s.grid;
  Eigen::MatrixXcd a = s.amp;
  for (int j = 1; j < g.np(); j += 2) a.col(j) *= -1.0;
  fft_along_p(a, -1);
  const double c = g.dp() / std::sqrt(2 * std::numbers::pi);
  for (int k = 0; k < g.np(); ++k) a.col(k) *= c * std::polar(1.0, -g.lambda_p(k) * g.p_min());
  return KvnState(Representation::kQLambdaP, std::move(a), g, s.hbar);
}

KvnState qlambda_to_qp(const KvnState& s) {
  const PhaseSpaceGrid& g = s.grid;
  Eigen::MatrixXcd a = s.amp;
  for (int k = 0; k < g.np(); ++k) a.col(k) *= std::polar(1.0, g.lambda_p(k) * g.p_min());
  fft_along_p(a, +1);
  const double c = g.dlambda_p() / std::sqrt(2 * std::numbers::pi);
  for (int j = 0; j < g.np(); ++j) a.col(j) *= (j % 2 == 0 ? c : -c);
  return KvnState(Representation::kQP, std::move(a), g, s.hbar);
}

int floor_half(int k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }
int wrap(int i, int n) { return ((i % n) + n) % n; }

// Shifts every odd-offset column by half a cell along q: out(i) = in(i + sign/2).
void half_cell_shift(Eigen::MatrixXcd& a, const PhaseSpaceGrid& g, int sign) {
  const int n = g.nq();
  fft_along_q(a, -1);
  Eigen::VectorXcd phase(n);
  for (int m = 0; m < n; ++m) phase(m) = std::polar(1.0 / n, sign * g.kappa_q(m) * g.dq() / 2);
  for (int k = 0; k < g.np(); ++k) {
    if ((k - g.np() / 2) % 2 != 0) {
      a.col(k).array() *= phase.array();
    } else {
      a.col(k) /= static_cast<double>(n);
    }
  }
  fft_along_q(a, +1);
}

KvnState qlambda_to_qqbar(const KvnState& s) {
  const PhaseSpaceGrid& g = s.grid;
  require_shear_alignment(g, s.hbar);
  const int n = g.nq();
  // Column k holds lambda_k = kk * dlambda; sample it at q = Q + kk*dq/2.
  Eigen::MatrixXcd rolled(n, n);
  for (int k = 0; k < n; ++k) {
    const int r = floor_half(k - n / 2);
    for (int i = 0; i < n; ++i) rolled(i, k) = s.amp(wrap(i + r, n), k);
  }
  half_cell_shift(rolled, g, +1);
  const double scale = 1.0 / std::sqrt(s.hbar);
  Eigen::MatrixXcd out(n, n);
  for (int k = 0; k < n; ++k) {
    const int kk = k - n / 2;
    for (int i = 0; i < n; ++i) out(i, wrap(i + kk, n)) = rolled(i, k) * scale;
  }
  return KvnState(Representation::kQQbar, std::move(out), g, s.hbar);
}

KvnState qqbar_to_qlambda(const KvnState& s) {
  const PhaseSpaceGrid& g = s.grid;
  require_shear_alignment(g, s.hbar);
  const int n = g.nq();
  const double scale = std::sqrt(s.hbar);
  Eigen::MatrixXcd rolled(n, n);
  for (int k = 0; k < n; ++k) {
    const int kk = k - n / 2;
    for (int i = 0; i < n; ++i) rolled(i, k) = s.amp(i, wrap(i + kk, n)) * scale;
  }
  half_cell_shift(rolled, g, -1);
  Eigen::MatrixXcd out(n, n);
  for (int k = 0; k < n; ++k) {
    const int r = floor_half(k - n / 2);
    for (int i = 0; i < n; ++i) out(wrap(i + r, n), k) = rolled(i, k);
  }
  return KvnState(Representation::kQLambdaP, std::move(out), g, s.hbar);
}

}  // namespace

KvnState init_gaussian(const PhaseSpaceGrid& grid, const GaussianParams& params, Representation rep, double hbar) {
  if (!(params.sigma_q > 0) || !(params.sigma_p > 0)) throw ConfigError("init_gaussian: widths must be positive");
  check_decay(grid, params);
  if (rep == Representation::kQQbar) require_shear_alignment(grid, hbar);
  Eigen::MatrixXcd a(grid.nq(), grid.np());
  for (int j = 0; j < grid.np(); ++j)
    for (int i = 0; i < grid.nq(); ++i) a(i, j) = gaussian(params, grid.q(i), grid.p(j));
  KvnState s(Representation::kQP, std::move(a), grid, hbar);
  s.amp /= std::sqrt(norm_squared(s));
  return to_representation(s, rep);
}

KvnState to_representation(const KvnState& s, Representation target) {
  KvnState cur = s;
  while (cur.rep != target) {
    switch (cur.rep) {
      case Representation::kQP:
        cur = qp_to_qlambda(cur);
        break;
      case Representation::kQLambdaP:
        cur = target == Representation::kQP ? qlambda_to_qp(cur) : qlambda_to_qqbar(cur);
        break;
      case Representation::kQQbar:
        cur = qqbar_to_qlambda(cur);
        break;
    }
  }
  return cur;
}

}  // namespace kvn::phase_space
