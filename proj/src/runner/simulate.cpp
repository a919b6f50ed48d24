#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "kvn/algebra/text.hpp"
#include "kvn/embedding/diagnostics.hpp"
#include "kvn/embedding/product_state.hpp"
#include "kvn/embedding/quantum_state.hpp"
#include "kvn/embedding/schrodinger.hpp"
#include "kvn/errors.hpp"
#include "kvn/phase_space/observables.hpp"
#include "kvn/phase_space/snapshot.hpp"
#include "kvn/runner/commands.hpp"

namespace kvn::runner {

namespace ps = kvn::phase_space;
namespace emb = kvn::embedding;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string measured(const std::string& what, double value, double tolerance) {
  return what + " = " + sci(value) + ", tolerance " + sci(tolerance);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

emb::QuantumState1D packet(const Scenario& s, const WavepacketSpec& w) {
  return emb::wavepacket(s.grid, s.hbar, w.q0, w.p0, w.sigma);
}

ps::KvnState initial_state(const Scenario& s) {
  try {
    if (const auto* g = std::get_if<ps::GaussianParams>(&s.initial))
      return ps::init_gaussian(s.grid, *g, ps::Representation::kQP, s.hbar);
    const auto& p = std::get<ProductSpec>(s.initial);
    const ps::KvnState qq = emb::build_product_state(packet(s, p.psi), packet(s, p.chi), s.grid);
    return ps::to_representation(qq, ps::Representation::kQP);
  } catch (const ValidationError&) {
    throw;
  } catch (const ConfigError& e) {
    throw ValidationError("initial", e.what(), "widen the grid or narrow the packet");
  }
}

std::string describe_initial(const InitialSpec& init) {
  std::ostringstream out;
  out.precision(17);
  if (const auto* g = std::get_if<ps::GaussianParams>(&init)) {
    out << "gaussian q0=" << g->q0 << " p0=" << g->p0 << " sigma_q=" << g->sigma_q << " sigma_p=" << g->sigma_p
        << " angle=" << g->angle;
  } else {
    const auto& p = std::get<ProductSpec>(init);
    out << "product psi(q0=" << p.psi.q0 << " p0=" << p.psi.p0 << " sigma=" << p.psi.sigma << ") chi(q0=" << p.chi.q0
        << " p0=" << p.chi.p0 << " sigma=" << p.chi.sigma << ")";
  }
  return out.str();
}

double second_schmidt(const ps::KvnState& qp) {
  const std::vector<double> sv = emb::schmidt_spectrum(ps::to_representation(qp, ps::Representation::kQQbar));
  return sv.size() > 1 ? sv[1] : 0.0;
}

ps::Generator other(ps::Generator g) {
  return g == ps::Generator::kMoyal ? ps::Generator::kLiouville : ps::Generator::kMoyal;
}

std::string gen_name(ps::Generator g) { return std::string(ps::to_string(g)); }

}  // namespace

RunReport simulate(const Scenario& s, const std::filesystem::path& out_dir) {
  const std::filesystem::path dir = out_dir.empty() ? s.output : out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  RunReport r;
  r.title = "kvn simulate " + s.name;
  r.preamble = {{"scenario digest", s.digest},
                {"potential", s.potential + ", mass " + g17(s.hamiltonian.mass())},
                {"grid", s.grid.describe()},
                {"hbar", g17(s.hbar)},
                {"generator", gen_name(s.generator)},
                {"dt", g17(s.dt)},
                {"steps", std::to_string(s.steps)},
                {"initial", describe_initial(s.initial)}};

  auto t0 = Clock::now();
  const ps::KvnState initial = initial_state(s);
  ps::write_snapshot(initial, dir / "initial.bin");
  r.timings.emplace_back("initial", seconds_since(t0));

  // Schmidt sampling and snapshots share one stride through the run.
  const DiagnosticSpec* schmidt = nullptr;
  for (const DiagnosticSpec& d : s.diagnostics)
    if (d.kind == DiagnosticKind::kSchmidt) schmidt = &d;
  int stride = s.steps;
  if (schmidt) stride = std::gcd(stride, schmidt->sample_every);
  if (s.snapshot_every > 0) stride = std::gcd(stride, s.snapshot_every);

  t0 = Clock::now();
  const ps::SplitStepPropagator prop(s.grid, s.hamiltonian, s.dt, s.generator, s.hbar);
  ps::KvnState state = initial;
  std::vector<double> schmidt_t;
  std::vector<double> schmidt_v;
  if (schmidt) {
    schmidt_t.push_back(0.0);
    schmidt_v.push_back(second_schmidt(state));
  }
  for (int done = 0; done < s.steps;) {
    prop.evolve_in_place(state.amp, stride);
    done += stride;
    if (schmidt && done % schmidt->sample_every == 0) {
      schmidt_t.push_back(done * s.dt);
      schmidt_v.push_back(second_schmidt(state));
    }
    if (s.snapshot_every > 0 && done % s.snapshot_every == 0 && done < s.steps)
      ps::write_snapshot(state, dir / ("step_" + std::to_string(done) + ".bin"));
  }
  ps::write_snapshot(state, dir / "final.bin");
  ps::write_marginals(state, dir / "final");
  r.timings.emplace_back("evolve", seconds_since(t0));

  for (const DiagnosticSpec& d : s.diagnostics) {
    t0 = Clock::now();
    std::string kind(to_string(d.kind));
    if (d.kind == DiagnosticKind::kEnergyTrace) kind += " " + gen_name(d.generator.value_or(s.generator));
    switch (d.kind) {
      case DiagnosticKind::kNorm: {
        const double dev = std::abs(ps::norm_squared(state) - 1.0);
        r.checks.push_back({"norm", dev <= d.tolerance, d.expect, measured("|norm^2 - 1|", dev, d.tolerance)});
        break;
      }
      case DiagnosticKind::kEnergyTrace: {
        const ps::Generator g = d.generator.value_or(s.generator);
        const emb::EnergyTrace trace = emb::energy_trace(initial, s.hamiltonian, g, s.dt, s.steps, d.sample_every);
        emb::write_energy_trace_csv(trace, dir / ("energy_" + gen_name(g) + ".csv"));
        const double drift = trace.relative_drift();
        r.checks.push_back({"energy_trace " + gen_name(g), drift <= d.tolerance, d.expect,
                            measured("relative drift of <H(Q,P)>", drift, d.tolerance) + ", E(0) = " +
                                sci(trace.values.front())});
        break;
      }
      case DiagnosticKind::kSchmidt: {
        std::string csv = "t,value\n";
        double worst = 0.0;
        for (std::size_t i = 0; i < schmidt_t.size(); ++i) {
          csv += g17(schmidt_t[i]) + "," + g17(schmidt_v[i]) + "\n";
          worst = std::max(worst, schmidt_v[i]);
        }
        write_text(dir / "schmidt_trace.csv", csv);
        emb::write_schmidt_csv(emb::schmidt_spectrum(ps::to_representation(state, ps::Representation::kQQbar)),
                               dir / "schmidt.csv");
        r.checks.push_back({"schmidt", worst <= d.tolerance, d.expect,
                            measured("max second Schmidt value", worst, d.tolerance) + " over " +
                                std::to_string(schmidt_t.size()) + " samples"});
        break;
      }
      case DiagnosticKind::kClassicalExpectations: {
        std::string csv = "f,initial,final\n";
        for (std::size_t i = 0; i < d.functions.size(); ++i) {
          const double a = ps::expectation_classical(initial, d.parsed_functions[i]);
          const double b = ps::expectation_classical(state, d.parsed_functions[i]);
          csv += d.functions[i] + "," + g17(a) + "," + g17(b) + "\n";
          const double change = std::abs(b - a);
          std::string detail = "initial " + sci(a) + ", final " + sci(b);
          detail += std::isinf(d.tolerance) ? ", recorded only" : ", " + measured("change", change, d.tolerance);
          r.checks.push_back({"classical_expectations <" + d.functions[i] + ">", change <= d.tolerance, d.expect, detail});
        }
        write_text(dir / "classical_expectations.csv", csv);
        break;
      }
      case DiagnosticKind::kFidelityVsOracle: {
        const auto& p = std::get<ProductSpec>(s.initial);
        const emb::QuantumState1D oracle =
            emb::schrodinger_oracle_evolve(packet(s, p.psi), s.hamiltonian, s.dt, s.steps);
        // Threshold 1 always extracts; entanglement is the schmidt diagnostic's job.
        const emb::QuantumState1D psi =
            emb::extract_q_factor(ps::to_representation(state, ps::Representation::kQQbar), 1.0);
        const double infidelity = 1.0 - emb::fidelity(psi, oracle);
        r.checks.push_back({"fidelity_vs_oracle", infidelity <= d.tolerance, d.expect,
                            measured("1 - fidelity", infidelity, d.tolerance)});
        break;
      }
      case DiagnosticKind::kGeneratorEquivalence: {
        const ps::Generator g = other(s.generator);
        const ps::SplitStepPropagator alt(s.grid, s.hamiltonian, s.dt, g, s.hbar);
        const ps::KvnState alt_final = alt.evolve(initial, s.steps);
        ps::write_snapshot(alt_final, dir / ("final_" + gen_name(g) + ".bin"));
        const double diff = ps::max_abs_difference(state, alt_final);
        r.checks.push_back({"generator_equivalence " + gen_name(s.generator) + " vs " + gen_name(g),
                            diff <= d.tolerance, d.expect, measured("max |difference|", diff, d.tolerance)});
        break;
      }
    }
    r.timings.emplace_back(kind, seconds_since(t0));
  }

  write_text(dir / "report.txt", r.text());
  write_text(dir / "timings.txt", r.timings_text());
  return r;
}

RunReport compare_snapshots(const std::filesystem::path& a, const std::filesystem::path& b, double tolerance,
                            bool expect_different) {
  if (!(tolerance > 0)) throw ValidationError("tol", "must be > 0", "");
  const ps::KvnState sa = ps::read_snapshot(a);
  const ps::KvnState sb = ps::read_snapshot(b);
  std::string mismatch;
  if (sa.rep != sb.rep)
    mismatch += " representation " + std::string(ps::to_string(sa.rep)) + " vs " + std::string(ps::to_string(sb.rep)) + ";";
  if (!(sa.grid == sb.grid)) mismatch += " grid " + sa.grid.describe() + " vs " + sb.grid.describe() + ";";
  if (sa.hbar != sb.hbar) mismatch += " hbar " + g17(sa.hbar) + " vs " + g17(sb.hbar) + ";";
  if (!mismatch.empty()) throw ConfigError("snapshot header mismatch:" + mismatch);

  RunReport r;
  r.title = "kvn compare";
  r.preamble = {{"a", a.filename().string()},
                {"b", b.filename().string()},
                {"grid", sa.grid.describe()},
                {"representation", std::string(ps::to_string(sa.rep))},
                {"hbar", g17(sa.hbar)}};
  const double max_diff = ps::max_abs_difference(sa, sb);
  const double l2 = ps::l2_difference(sa, sb);
  r.checks.push_back({expect_different ? "snapshots differ" : "snapshots agree", max_diff <= tolerance,
                      expect_different ? Expect::kNonzero : Expect::kSmall,
                      measured("max |difference|", max_diff, tolerance) + ", L2 difference = " + sci(l2)});
  return r;
}

}  // namespace kvn::runner
