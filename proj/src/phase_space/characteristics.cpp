#include "kvn/phase_space/characteristics.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>

#include "kvn/errors.hpp"

namespace kvn::phase_space {

namespace {

using cd = std::complex<double>;

// d/dx of periodic samples; the Nyquist mode is dropped.
Eigen::VectorXcd spectral_derivative(Eigen::FFT<double>& fft, const Eigen::VectorXcd& f, double length) {
  const int n = static_cast<int>(f.size());
  Eigen::VectorXcd spec;
  fft.fwd(spec, f);
  for (int m = 0; m < n; ++m) {
    const int k = m < n / 2 ? m : m - n;
    spec(m) *= (m == n / 2) ? cd(0) : cd(0, 2 * M_PI * k / length);
  }
  Eigen::VectorXcd out;
  fft.inv(out, spec);
  return out;
}

Eigen::MatrixXcd derivative_q(const Eigen::MatrixXcd& a, double length) {
  Eigen::FFT<double> fft;
  Eigen::MatrixXcd out(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) out.col(j) = spectral_derivative(fft, a.col(j), length);
  return out;
}

Eigen::MatrixXcd derivative_p(const Eigen::MatrixXcd& a, double length) {
  Eigen::FFT<double> fft;
  Eigen::MatrixXcd out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    out.row(i) = spectral_derivative(fft, a.row(i).transpose(), length).transpose();
  return out;
}

struct Hermite {
  double value[2];
  double slope[2];
};

Hermite basis(double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return {{2 * t3 - 3 * t2 + 1, -2 * t3 + 3 * t2}, {t3 - 2 * t2 + t, t3 - t2}};
}

}  // namespace

CharacteristicsResult characteristics_oracle(const KvnState& s, const HamiltonianSpec& h, double t,
                                             double dt_oracle) {
  require_representation(s, Representation::kQP, "characteristics_oracle");
  if (!(dt_oracle > 0)) throw ContractError("characteristics_oracle: dt_oracle must be positive");
  const PhaseSpaceGrid& g = s.grid;
  const int nq = g.nq();
  const int np = g.np();
  const double lq = g.q_max() - g.q_min();
  const double lp = g.p_max() - g.p_min();

  const Eigen::MatrixXcd fq = derivative_q(s.amp, lq);
  const Eigen::MatrixXcd fp = derivative_p(s.amp, lp);
  const Eigen::MatrixXcd fqp = derivative_p(fq, lp);

  // Backward velocity Verlet from every node at once.
  Eigen::ArrayXd q(nq * np);
  Eigen::ArrayXd p(nq * np);
  for (int j = 0; j < np; ++j)
    for (int i = 0; i < nq; ++i) {
      q(j * nq + i) = g.q(i);
      p(j * nq + i) = g.p(j);
    }
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(t) / dt_oracle - 1e-12)));
  const double step = -t / steps;
  auto force = [&h](const Eigen::ArrayXd& x) { return x.unaryExpr([&h](double v) { return -h.dV(v); }).eval(); };
  Eigen::ArrayXd f = force(q);
  for (int k = 0; k < steps; ++k) {
    p += 0.5 * step * f;
    q += step * p / h.mass();
    f = force(q);
    p += 0.5 * step * f;
  }

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(nq, np);
  long flagged = 0;
  const double dq = g.dq();
  const double dp = g.dp();
  for (int j = 0; j < np; ++j) {
    for (int i = 0; i < nq; ++i) {
      const double x = q(j * nq + i);
      const double y = p(j * nq + i);
      if (!(x >= g.q_min() && x < g.q_max() && y >= g.p_min() && y < g.p_max())) {
        ++flagged;
        continue;
      }
      const double sx = (x - g.q_min()) / dq;
      const double sy = (y - g.p_min()) / dp;
      const int i0 = std::min(static_cast<int>(sx), nq - 1);
      const int j0 = std::min(static_cast<int>(sy), np - 1);
      const Hermite bu = basis(sx - i0);
      const Hermite bv = basis(sy - j0);
      cd acc = 0;
      for (int a = 0; a < 2; ++a) {
        const int ii = (i0 + a) % nq;
        for (int b = 0; b < 2; ++b) {
          const int jj = (j0 + b) % np;
          acc += bu.value[a] * bv.value[b] * s.amp(ii, jj) + bu.slope[a] * bv.value[b] * dq * fq(ii, jj) +
                 bu.value[a] * bv.slope[b] * dp * fp(ii, jj) + bu.slope[a] * bv.slope[b] * dq * dp * fqp(ii, jj);
        }
      }
      out(i, j) = acc;
    }
  }
  const double coverage = 1.0 - static_cast<double>(flagged) / (static_cast<double>(nq) * np);
  return {KvnState(Representation::kQP, std::move(out), g, s.hbar), coverage, flagged};
}

}  // namespace kvn::phase_space
