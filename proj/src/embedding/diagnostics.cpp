#include "kvn/embedding/diagnostics.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "kvn/embedding/product_state.hpp"
#include "kvn/errors.hpp"
#include "kvn/phase_space/observables.hpp"
#include "kvn/phase_space/representation.hpp"
#include "weyl.hpp"

namespace kvn::embedding {

using phase_space::KvnState;
using phase_space::Representation;

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_csv(const std::filesystem::path& path, const char* header) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << header << "\n";
  return out;
}

}  // namespace

RedundancyReport redundancy_check(const QuantumState1D& psi, const QuantumState1D& chi, const QuantumState1D& sigma,
                                  const std::vector<algebra::ClassicalPolynomial>& observables) {
  if (fidelity(chi, sigma) > 1 - 1e-12) throw ContractError("redundancy_check: chi and sigma are the same state");
  const KvnState a = build_product_state(psi, chi);
  const KvnState b = build_product_state(psi, sigma);
  RedundancyReport r;
  for (const auto& f : observables) {
    ObservableComparison c{f, quantum_expectation(a, f), quantum_expectation(b, f)};
    r.max_quantum_difference = std::max(r.max_quantum_difference, std::abs(c.with_chi - c.with_sigma));
    r.quantum.push_back(std::move(c));
  }
  r.kvn_overlap = std::abs(phase_space::inner_product(a, b));
  r.kvn_distance = phase_space::l2_difference(a, b);
  const auto q = algebra::ClassicalPolynomial::q();
  r.classical_q_with_chi = phase_space::expectation_classical(phase_space::to_representation(a, Representation::kQP), q);
  r.classical_q_with_sigma =
      phase_space::expectation_classical(phase_space::to_representation(b, Representation::kQP), q);
  r.passed = r.max_quantum_difference < kRedundancyTolerance && r.kvn_overlap < 1 - 1e-12;
  return r;
}

double EnergyTrace::relative_drift() const {
  if (values.empty()) return 0.0;
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::abs(v - values.front()));
  return worst / std::abs(values.front());
}

EnergyTrace energy_trace(const KvnState& initial, const phase_space::HamiltonianSpec& h,
                         phase_space::Generator generator, double dt, int steps, int sample_every) {
  if (steps < 0 || sample_every < 1) throw ContractError("energy_trace: need steps >= 0 and sample_every >= 1");
  phase_space::require_shear_alignment(initial.grid, initial.hbar);
  const algebra::ClassicalPolynomial energy = h.classical();
  const phase_space::SplitStepPropagator prop(initial.grid, h, dt, generator, initial.hbar);
  KvnState s = phase_space::to_representation(initial, Representation::kQP);
  EnergyTrace trace{{}, {}, generator};
  auto sample = [&](int step) {
    trace.times.push_back(step * dt);
    trace.values.push_back(quantum_expectation(phase_space::to_representation(s, Representation::kQQbar), energy));
  };
  sample(0);
  for (int done = 0; done < steps;) {
    const int chunk = std::min(sample_every, steps - done);
    prop.evolve_in_place(s.amp, chunk);
    done += chunk;
    sample(done);
  }
  return trace;
}

MomentumRouteReport momentum_representation_check(const KvnState& s, const algebra::ClassicalPolynomial& f) {
  const KvnState qq = phase_space::to_representation(s, Representation::kQQbar);
  MomentumRouteReport r;
  r.via_q = quantum_expectation(qq, f);
  const QuantumState1D psi = extract_q_factor(qq);
  r.norm_q = norm_squared(psi);

  // phi(P_k) on centered P_k = (k - n/2) dP, taken about the box center Qc so
  // that the remaining phase exp(-i P Qc / hbar) is carried by Q^ = Qc + i hbar d/dP.
  const int n = psi.size();
  const double hbar = psi.hbar;
  const double dP = 2 * std::numbers::pi * hbar / (n * psi.dq);
  const double Qc = psi.q_min + n * psi.dq / 2;
  Eigen::FFT<double> fft;
  Eigen::VectorXcd x(n);
  for (int i = 0; i < n; ++i) x(i) = (i % 2 == 0 ? 1.0 : -1.0) * psi.amp(i);
  Eigen::VectorXcd phi;
  fft.fwd(phi, x);
  const double c = psi.dq / std::sqrt(2 * std::numbers::pi * hbar);
  for (int k = 0; k < n; ++k) phi(k) *= (k % 2 == 0 ? c : -c);
  r.norm_p = phi.squaredNorm() * dP;

  Eigen::ArrayXd P(n);
  Eigen::ArrayXd Qspec(n);
  for (int k = 0; k < n; ++k) {
    P(k) = (k - n / 2) * dP;
    const int m = k < n / 2 ? k : k - n;
    Qspec(k) = Qc - m * psi.dq;  // Qc - hbar * nu_m with nu_m = 2 pi m / (n dP)
  }
  auto apply_p = [&](const Eigen::VectorXcd& v, int e) -> Eigen::VectorXcd {
    return (v.array() * P.pow(e).cast<std::complex<double>>()).matrix();
  };
  auto apply_q = [&](const Eigen::VectorXcd& v, int e) -> Eigen::VectorXcd {
    if (e == 0) return v;
    Eigen::VectorXcd spec;
    fft.fwd(spec, v);
    spec.array() *= Qspec.pow(e).cast<std::complex<double>>();
    Eigen::VectorXcd back;
    fft.inv(back, spec);
    return back;
  };
  const Eigen::VectorXcd fphi = detail::apply_weyl(f, phi, apply_q, apply_p);
  r.via_p = phi.dot(fphi).real() * dP / r.norm_p;
  r.passed = std::abs(r.via_q - r.via_p) < kMomentumRouteTolerance && std::abs(r.norm_q - r.norm_p) < kParsevalTolerance;
  return r;
}

void write_energy_trace_csv(const EnergyTrace& trace, const std::filesystem::path& path) {
  std::ofstream out = open_csv(path, "t,value");
  for (size_t k = 0; k < trace.times.size(); ++k) out << fmt(trace.times[k]) << "," << fmt(trace.values[k]) << "\n";
}

void write_schmidt_csv(const std::vector<double>& spectrum, const std::filesystem::path& path) {
  std::ofstream out = open_csv(path, "k,sigma_k");
  for (size_t k = 0; k < spectrum.size(); ++k) out << k << "," << fmt(spectrum[k]) << "\n";
}

}  // namespace kvn::embedding
