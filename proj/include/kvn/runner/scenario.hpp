#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kvn/algebra/classical_polynomial.hpp"
#include "kvn/phase_space/grid.hpp"
#include "kvn/phase_space/hamiltonian.hpp"
#include "kvn/phase_space/propagator.hpp"
#include "kvn/phase_space/representation.hpp"
#include "kvn/runner/report.hpp"

namespace kvn::runner {

// exp(-(Q - q0)^2 / 4 sigma^2 + i p0 Q / hbar)
struct WavepacketSpec {
  double q0 = 0.0;
  double p0 = 0.0;
  double sigma = 1.0;
};

// psi(Q) chi(Qbar); chi defaults to the centered sigma = 1 packet.
struct ProductSpec {
  WavepacketSpec psi;
  WavepacketSpec chi;
};

using InitialSpec = std::variant<phase_space::GaussianParams, ProductSpec>;

enum class DiagnosticKind {
  kNorm,                  // |norm^2 - 1| of the final state
  kEnergyTrace,           // relative drift of <H(Q^,P^)>
  kSchmidt,               // largest second Schmidt value over the run
  kClassicalExpectations, // change of each int f |psi|^2 between t = 0 and the end
  kFidelityVsOracle,      // 1 - fidelity of the extracted Q factor against the Schrodinger oracle
  kGeneratorEquivalence,  // max-norm distance to the same run under the other generator
};

std::string_view to_string(DiagnosticKind k);

struct DiagnosticSpec {
  DiagnosticKind kind;
  double tolerance;
  Expect expect = Expect::kSmall;
  // energy_trace only; defaults to the scenario generator.
  std::optional<phase_space::Generator> generator;
  // energy_trace and schmidt.
  int sample_every = 1;
  // classical_expectations only.
  std::vector<std::string> functions;
  std::vector<algebra::ClassicalPolynomial> parsed_functions;
};

struct Scenario {
  std::string name;
  std::string digest;  // FNV-1a 64 of the file bytes, hex
  std::string potential;
  phase_space::HamiltonianSpec hamiltonian;
  phase_space::PhaseSpaceGrid grid;
  double hbar;
  phase_space::Generator generator;
  InitialSpec initial;
  double dt;
  int steps;
  int snapshot_every;  // 0: initial and final only
  std::vector<DiagnosticSpec> diagnostics;
  std::filesystem::path output;
};

// Parses and validates a scenario (JSON with // and /* */ comments; schema in
// docs/scenario_format.md). ParseError with line and column for malformed
// text; ValidationError naming the field for anything that parses but is
// invalid. Relative output paths are kept as written.
Scenario parse_scenario(std::string_view text, std::string_view default_name = "scenario");

// IoError if the file cannot be read; the default name is the file stem.
Scenario load_scenario(const std::filesystem::path& path);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace kvn::runner
