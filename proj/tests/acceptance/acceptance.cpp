// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Pass criterion numbers as arguments to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kvn/algebra/quantization.hpp"
#include "kvn/algebra/text.hpp"
#include "kvn/embedding/diagnostics.hpp"
#include "kvn/embedding/product_state.hpp"
#include "kvn/embedding/schrodinger.hpp"
#include "kvn/phase_space/characteristics.hpp"
#include "kvn/phase_space/observables.hpp"
#include "kvn/phase_space/propagator.hpp"
#include "kvn/phase_space/representation.hpp"
#include "kvn/runner/algebra_checks.hpp"

using namespace kvn;
using algebra::ClassicalPolynomial;
using algebra::HbarCoefficient;
using algebra::OperatorPolynomial;
using algebra::Rational;
using phase_space::Generator;
using phase_space::HamiltonianSpec;
using phase_space::KvnState;
using phase_space::PhaseSpaceGrid;
using phase_space::Representation;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fixed(double x, int digits = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

const HbarCoefficient kIHbar(algebra::ComplexRational::i(), 1);

OperatorPolynomial bopp(const ClassicalPolynomial& f, bool barred = false) {
  return algebra::bopp_quantize(f, barred ? algebra::BoppVariant::kBarred : algebra::BoppVariant::kUnbarred);
}

HamiltonianSpec quartic() { return HamiltonianSpec(ClassicalPolynomial::q().pow(4) * Rational(1, 4)); }

// The random Hamiltonians shared by criteria 3 and 4.
std::vector<ClassicalPolynomial> random_hamiltonians() {
  std::mt19937_64 rng(20240601);
  std::vector<ClassicalPolynomial> out;
  for (int k = 0; k < 50; ++k) out.push_back(runner::random_polynomial(rng, 3, 6));
  return out;
}

Outcome heisenberg() {
  constexpr int n = 3;
  int checked = 0;
  int nonzero = 0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (bool barred : {false, true}) {
        const OperatorPolynomial qj = bopp(ClassicalPolynomial::q(n, j), barred);
        const OperatorPolynomial pj = bopp(ClassicalPolynomial::p(n, j), barred);
        const OperatorPolynomial qk = bopp(ClassicalPolynomial::q(n, k), barred);
        const OperatorPolynomial pk = bopp(ClassicalPolynomial::p(n, k), barred);
        OperatorPolynomial qp = algebra::commutator(qj, pk);
        if (j == k) qp += OperatorPolynomial::constant(n, barred ? kIHbar : -kIHbar);
        for (const OperatorPolynomial& r : {qp, algebra::commutator(qj, qk), algebra::commutator(pj, pk)}) {
          ++checked;
          if (!r.is_zero()) ++nonzero;
        }
      }
      // unbarred against barred
      for (bool pa : {false, true}) {
        for (bool pb : {false, true}) {
          const auto a = pa ? ClassicalPolynomial::p(n, j) : ClassicalPolynomial::q(n, j);
          const auto b = pb ? ClassicalPolynomial::p(n, k) : ClassicalPolynomial::q(n, k);
          ++checked;
          if (!algebra::commutator(bopp(a), bopp(b, true)).is_zero()) ++nonzero;
        }
      }
    }
  }
  Outcome o;
  o.require(nonzero == 0, std::to_string(checked) + " commutators, " + std::to_string(nonzero) + " nonzero residuals");
  return o;
}

Outcome angular_momentum() {
  using algebra::Axis;
  const char* closed[] = {
      "y*pz - z*py - 1/2*hbar*(ly*z - lz*y + lpy*pz - lpz*py) - 1/4*hbar^2*(lpy*lz - ly*lpz)",
      "z*px - x*pz - 1/2*hbar*(lz*x - lx*z + lpz*px - lpx*pz) - 1/4*hbar^2*(lpz*lx - lz*lpx)",
      "x*py - y*px - 1/2*hbar*(lx*y - ly*x + lpx*py - lpy*px) - 1/4*hbar^2*(lpx*ly - lx*lpy)",
  };
  const Axis axes[] = {Axis::kX, Axis::kY, Axis::kZ};
  Outcome o;
  int display_mismatch = 0;
  for (int i = 0; i < 3; ++i)
    if (algebra::angular_momentum(axes[i]) != algebra::parse_operator(closed[i], 3)) ++display_mismatch;
  o.require(display_mismatch == 0, "components vs written form: " + std::to_string(display_mismatch) + " mismatches");
  int nonzero = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      const int eps = j == (i + 1) % 3 ? 1 : -1;
      const OperatorPolynomial lhs = algebra::commutator(algebra::angular_momentum(axes[i]), algebra::angular_momentum(axes[j]));
      const OperatorPolynomial rhs = algebra::scale(algebra::angular_momentum(axes[k]), kIHbar * HbarCoefficient(eps));
      if (!(lhs - rhs).is_zero()) ++nonzero;
    }
  }
  o.require(nonzero == 0, "[Mi, Mj] - i hbar eps_ijk Mk over 6 ordered pairs: " + std::to_string(nonzero) + " nonzero");
  return o;
}

Outcome difference_identity() {
  int nonzero = 0;
  int max_degree = 0;
  for (const ClassicalPolynomial& h : random_hamiltonians()) {
    max_degree = std::max(max_degree, h.degree());
    if (!algebra::verify_difference_identity(h).is_zero()) ++nonzero;
  }
  Outcome o;
  o.require(nonzero == 0 && max_degree == 6, "50 random H (3 dof, degree 6): " + std::to_string(nonzero) + " nonzero residuals");
  return o;
}

Outcome generator_commutes() {
  int nonzero = 0;
  for (const ClassicalPolynomial& h : random_hamiltonians())
    if (!algebra::commutator(algebra::moyal_generator(h), bopp(h)).is_zero()) ++nonzero;
  Outcome o;
  o.require(nonzero == 0, "[G, H(Q,P)] over 50 random H: " + std::to_string(nonzero) + " nonzero");

  const ClassicalPolynomial q = ClassicalPolynomial::q();
  const ClassicalPolynomial p = ClassicalPolynomial::p();
  const ClassicalPolynomial h = p.pow(2) * Rational(1, 2) + q.pow(4) * Rational(1, 4);
  const OperatorPolynomial lead = algebra::energy_nonconservation_leading(h);
  o.require(!lead.is_zero() && lead == algebra::energy_nonconservation_closed_form(h),
            "[L, H(Q,P)] to hbar^2 = " + algebra::render(lead) + " matches closed form");
  const OperatorPolynomial g1 = algebra::commutator(algebra::moyal_term(h, 1), bopp(h)).truncated(2);
  o.require((lead + g1).is_zero(), "cancelled by [G1, H(Q,P)]");
  return o;
}

Outcome groenewald() {
  const ClassicalPolynomial q = ClassicalPolynomial::q();
  const ClassicalPolynomial p = ClassicalPolynomial::p();
  Outcome o;
  o.require(algebra::groenewald_probe(q, p).is_zero(), "(q,p) residual 0");
  o.require(algebra::groenewald_probe(q.pow(2), p.pow(2)).is_zero(), "(q^2,p^2) residual 0");
  const OperatorPolynomial r = algebra::groenewald_probe(q.pow(3), p.pow(3));
  o.require(!r.is_zero(), "(q^3,p^3) residual " + algebra::render(r));
  return o;
}

Outcome harmonic_period() {
  // 512^2 on [-10,10)^2; hbar chosen so that the grid is shear-aligned.
  const double hbar = 400.0 / (1024.0 * std::numbers::pi);
  const PhaseSpaceGrid g = phase_space::aligned_grid(512, -10, 10, hbar);
  const HamiltonianSpec h = HamiltonianSpec::harmonic(1.0);
  const KvnState s = phase_space::init_gaussian(g, {2, 0, 0.5, 0.8, 0.3}, Representation::kQP, hbar);
  const double dt = 2 * std::numbers::pi / 2048;
  const KvnState lv = phase_space::SplitStepPropagator(g, h, dt, Generator::kLiouville).evolve(s, 2048);
  const KvnState mv = phase_space::SplitStepPropagator(g, h, dt, Generator::kMoyal, hbar).evolve(s, 2048);
  Outcome o;
  const double ret = phase_space::max_abs_difference(lv, s);
  const double gen = phase_space::max_abs_difference(lv, mv);
  o.require(ret < 1e-4, "liouville return error " + sci(ret) + " < 1e-4");
  o.require(gen < 1e-10, "moyal vs liouville " + sci(gen) + " < 1e-10");
  return o;
}

Outcome characteristics_agreement() {
  const PhaseSpaceGrid g(256, 256, -8, 8, -8, 8);
  const HamiltonianSpec h = quartic();
  const KvnState s = phase_space::init_gaussian(g, {1, 0, 0.3, 0.3, 0}, Representation::kQP, 1.0);
  const phase_space::CharacteristicsResult oracle = phase_space::characteristics_oracle(s, h, 1.0, 1e-4);
  const auto error = [&](double dt) {
    const int steps = static_cast<int>(std::lround(1.0 / dt));
    return phase_space::max_abs_difference(
        phase_space::SplitStepPropagator(g, h, dt, Generator::kLiouville).evolve(s, steps), oracle.state);
  };
  Outcome o;
  const double e = error(1e-3);
  o.require(e < 1e-3, "dt 1e-3 vs characteristics " + sci(e) + " < 1e-3 (coverage " + fixed(oracle.coverage, 6) + ")");
  std::vector<double> errs;
  for (double dt : {0.1, 0.05, 0.025, 0.0125}) errs.push_back(error(dt));
  std::string ratios;
  bool in_range = true;
  for (std::size_t k = 1; k < errs.size(); ++k) {
    const double r = errs[k - 1] / errs[k];
    in_range = in_range && r >= 3.5 && r <= 4.5;
    ratios += (k > 1 ? ", " : "") + fixed(r, 2);
  }
  o.require(in_range, "error ratio per dt halving from 0.1: " + ratios + " in [3.5, 4.5]");
  return o;
}

Outcome energy_dichotomy() {
  const HamiltonianSpec h = quartic();
  const PhaseSpaceGrid g = phase_space::aligned_grid(256, -12, 12, 1.0);
  const KvnState s0 = embedding::build_product_state(embedding::wavepacket(g, 1.0, 1.0, 0.0, 0.3),
                                                     embedding::wavepacket(g, 1.0, 0.0, 0.0, 0.5), g);
  Outcome o;
  const double dm = embedding::energy_trace(s0, h, Generator::kMoyal, 1e-3, 1000).relative_drift();
  const double dl = embedding::energy_trace(s0, h, Generator::kLiouville, 1e-3, 1000).relative_drift();
  o.require(dm < 1e-6, "moyal drift " + sci(dm) + " < 1e-6");
  o.require(dl > 1e-3, "liouville drift " + sci(dl) + " > 1e-3");

  // Same (q,p) Gaussian for each hbar; grids keep the p box fixed.
  std::vector<double> drift;
  const std::pair<double, int> runs[] = {{0.1, 512}, {0.2, 256}, {0.4, 128}};
  for (const auto& [hbar, n] : runs) {
    const PhaseSpaceGrid gh = phase_space::aligned_grid(n, -7, 7, hbar);
    const KvnState s = phase_space::init_gaussian(gh, {1.5, 0, 0.5, 1.0, 0}, Representation::kQP, hbar);
    drift.push_back(embedding::energy_trace(s, h, Generator::kLiouville, 1e-3, 1000, 10).relative_drift());
  }
  // least-squares slope of log drift against log hbar
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 0; k < 3; ++k) {
    const double x = std::log(runs[k].first);
    const double y = std::log(drift[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
  o.require(slope >= 1.8 && slope <= 2.2, "liouville drift ~ hbar^" + fixed(slope, 3) + " (drifts " + sci(drift[0]) +
                                              ", " + sci(drift[1]) + ", " + sci(drift[2]) + ")");
  return o;
}

Outcome embedding_factorization() {
  const HamiltonianSpec h = quartic();
  const PhaseSpaceGrid g = phase_space::aligned_grid(256, -12, 12, 1.0);
  const embedding::QuantumState1D psi = embedding::wavepacket(g, 1.0, 1.0, 0.5, 0.5);
  const embedding::QuantumState1D chi = embedding::wavepacket(g, 1.0, 0.0, 0.0, 0.5);
  KvnState s = phase_space::to_representation(embedding::build_product_state(psi, chi, g), Representation::kQP);
  const double dt = 1e-3;
  const int steps = 2000;
  const phase_space::SplitStepPropagator prop(g, h, dt, Generator::kMoyal, 1.0);
  double worst = embedding::schmidt_spectrum(phase_space::to_representation(s, Representation::kQQbar))[1];
  for (int done = 0; done < steps; done += 100) {
    prop.evolve_in_place(s.amp, 100);
    worst = std::max(worst, embedding::schmidt_spectrum(phase_space::to_representation(s, Representation::kQQbar))[1]);
  }
  const embedding::QuantumState1D extracted =
      embedding::extract_q_factor(phase_space::to_representation(s, Representation::kQQbar));
  const double infidelity = 1 - embedding::fidelity(extracted, embedding::schrodinger_oracle_evolve(psi, h, dt, steps));
  Outcome o;
  o.require(worst < 1e-8, "max second Schmidt value over 21 samples " + sci(worst) + " < 1e-8");
  o.require(infidelity < 1e-6, "1 - fidelity vs Schrodinger oracle " + sci(infidelity) + " < 1e-6");
  return o;
}

Outcome redundancy() {
  const ClassicalPolynomial q = ClassicalPolynomial::q();
  const ClassicalPolynomial p = ClassicalPolynomial::p();
  const std::vector<ClassicalPolynomial> fs = {q, p, q.pow(2), p.pow(2), q * p, q.pow(3),
                                               p.pow(2) * Rational(1, 2) + q.pow(4) * Rational(1, 4)};
  const PhaseSpaceGrid g = phase_space::aligned_grid(256, -12, 12, 1.0);
  const embedding::QuantumState1D psi = embedding::wavepacket(g, 1.0, 1.0, -0.5, 0.6);
  const embedding::RedundancyReport r = embedding::redundancy_check(
      psi, embedding::default_chi(g, 1.0), embedding::wavepacket(g, 1.0, 1.5, 1.0, 0.7), fs);
  Outcome o;
  o.require(r.max_quantum_difference < 1e-10,
            std::to_string(fs.size()) + " quantum expectations differ by " + sci(r.max_quantum_difference) + " < 1e-10");
  o.require(r.kvn_distance > 0.1, "KvN vectors differ (L2 distance " + fixed(r.kvn_distance) + ")");

  const KvnState s = phase_space::to_representation(
      embedding::build_product_state(psi, embedding::default_chi(g, 1.0), g), Representation::kQP);
  const KvnState t = phase_space::phase_scramble(s, 12345);
  double classical_change = 0;
  for (const ClassicalPolynomial& f : fs) {
    const double a = phase_space::expectation_classical(s, f);
    const double b = phase_space::expectation_classical(t, f);
    classical_change = std::max(classical_change, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  o.require(classical_change < 1e-12, "scramble moves classical expectations by " + sci(classical_change) + " < 1e-12");
  const double before = embedding::quantum_expectation(phase_space::to_representation(s, Representation::kQQbar), p);
  const double after = embedding::quantum_expectation(phase_space::to_representation(t, Representation::kQQbar), p);
  o.require(std::abs(after - before) > 1e-3, "quantum <P> " + fixed(before, 4) + " -> " + fixed(after, 4));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "Heisenberg relations, 3 dof", 1, heisenberg},
      {2, "angular momentum algebra", 5, angular_momentum},
      {3, "difference identity", 30, difference_identity},
      {4, "generator commutes with H(Q,P); leading drift term", 60, generator_commutes},
      {5, "Groenewald probe", 5, groenewald},
      {6, "harmonic period, 512^2", 30, harmonic_period},
      {7, "quartic vs characteristics; Strang order", 60, characteristics_agreement},
      {8, "energy dichotomy; hbar^2 scaling", 120, energy_dichotomy},
      {9, "embedding stays factorized; oracle fidelity", 120, embedding_factorization},
      {10, "redundancy and phase scramble", 30, redundancy},
  };
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));

  int failed = 0;
  for (const Criterion& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.limit_seconds, "runtime " + fixed(secs, 2) + " s < " + fixed(c.limit_seconds, 0) + " s");
    if (!o.ok) ++failed;
    std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
