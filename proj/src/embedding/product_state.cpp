#include "kvn/embedding/product_state.hpp"

#include <cmath>
#include <complex>

#include <Eigen/SVD>

#include "kvn/errors.hpp"
#include "kvn/phase_space/fft.hpp"
#include "weyl.hpp"

namespace kvn::embedding {

using phase_space::KvnState;
using phase_space::PhaseSpaceGrid;
using phase_space::Representation;

KvnState build_product_state(const QuantumState1D& psi, const QuantumState1D& chi, const PhaseSpaceGrid& grid) {
  if (!psi.same_grid(chi)) throw ContractError("build_product_state: psi and chi live on different grids");
  if (psi.size() != grid.nq() || psi.q_min != grid.q_min() || std::abs(psi.dq - grid.dq()) > 1e-12 * grid.dq())
    throw ContractError("build_product_state: factors are not sampled on the grid's q nodes");
  phase_space::require_shear_alignment(grid, psi.hbar);
  Eigen::MatrixXcd amp = psi.amp * chi.amp.transpose();
  KvnState s(Representation::kQQbar, std::move(amp), grid, psi.hbar);
  s.amp /= std::sqrt(phase_space::norm_squared(s));
  return s;
}

KvnState build_product_state(const QuantumState1D& psi, const QuantumState1D& chi) {
  const int n = psi.size();
  return build_product_state(psi, chi, phase_space::aligned_grid(n, psi.q_min, psi.q_min + n * psi.dq, psi.hbar));
}

KvnState apply_quantum_observable(const KvnState& s, const algebra::ClassicalPolynomial& f) {
  phase_space::require_representation(s, Representation::kQQbar, "apply_quantum_observable");
  if (f.ndof() != 1) throw ContractError("apply_quantum_observable: one degree of freedom only");
  const PhaseSpaceGrid& g = s.grid;
  const int n = g.nq();
  Eigen::ArrayXd Q(n);
  Eigen::ArrayXd hk(n);
  for (int i = 0; i < n; ++i) {
    Q(i) = g.q(i);
    hk(i) = s.hbar * g.kappa_q(i);
  }
  auto apply_q = [&](const Eigen::MatrixXcd& x, int e) -> Eigen::MatrixXcd {
    if (e == 0) return x;
    return (x.array().colwise() * Q.pow(e).cast<std::complex<double>>()).matrix();
  };
  // -i hbar d/dQ is multiplication by hbar*kappa after a forward transform.
  auto apply_p = [&](const Eigen::MatrixXcd& x, int e) -> Eigen::MatrixXcd {
    if (e == 0) return x;
    Eigen::MatrixXcd y = x;
    phase_space::fft_along_q(y, -1);
    y.array().colwise() *= (hk.pow(e) / n).cast<std::complex<double>>();
    phase_space::fft_along_q(y, +1);
    return y;
  };
  KvnState out = s;
  out.amp = detail::apply_weyl(f, s.amp, apply_q, apply_p);
  return out;
}

double quantum_expectation(const KvnState& s, const algebra::ClassicalPolynomial& f) {
  const KvnState fs = apply_quantum_observable(s, f);
  return phase_space::inner_product(s, fs).real() / phase_space::norm_squared(s);
}

namespace {

std::vector<double> normalized_values(const Eigen::VectorXd& sv) {
  const double total = sv.norm();
  std::vector<double> out(sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k) out[k] = total > 0 ? sv(k) / total : 0.0;
  return out;
}

}  // namespace

std::vector<double> schmidt_spectrum(const KvnState& s) {
  phase_space::require_representation(s, Representation::kQQbar, "schmidt_spectrum");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(s.amp);
  return normalized_values(svd.singularValues());
}

QuantumState1D extract_q_factor(const KvnState& s, double threshold) {
  phase_space::require_representation(s, Representation::kQQbar, "extract_q_factor");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(s.amp, Eigen::ComputeThinU);
  const std::vector<double> spectrum = normalized_values(svd.singularValues());
  if (spectrum.size() > 1 && spectrum[1] > threshold)
    throw EntangledStateError("extract_q_factor: second Schmidt value " + std::to_string(spectrum[1]) +
                                  " exceeds the threshold " + std::to_string(threshold),
                              spectrum);
  Eigen::VectorXcd u = svd.matrixU().col(0);
  Eigen::Index top = 0;
  u.cwiseAbs().maxCoeff(&top);
  u *= std::abs(u(top)) / u(top);
  u(top) = std::abs(u(top));
  const PhaseSpaceGrid& g = s.grid;
  return QuantumState1D(u / std::sqrt(g.dq()), g.q_min(), g.dq(), s.hbar);
}

}  // namespace kvn::embedding
