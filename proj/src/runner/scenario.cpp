#include "kvn/runner/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kvn/algebra/text.hpp"
#include "kvn/errors.hpp"

namespace kvn::runner {

using nlohmann::json;
namespace ps = kvn::phase_space;

namespace {

// Field access with the dotted path kept for messages; rejects unknown keys
// so that typos do not silently fall back to defaults.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ValidationError(where(""), "must be an object", "");
  }

  std::string where(const std::string& key) const {
    if (path_.empty()) return key;
    return key.empty() ? path_ : path_ + "." + key;
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  const json& raw(const std::string& key) {
    if (!has(key)) throw ValidationError(where(key), "is required", "add \"" + key + "\"");
    return j_.at(key);
  }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) throw ValidationError(where(key), "must be a number", "");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ValidationError(where(key), "must be finite", "");
    return x;
  }
  double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

  long long integer(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer()) throw ValidationError(where(key), "must be an integer", "");
    return v.get<long long>();
  }
  long long integer(const std::string& key, long long fallback) { return has(key) ? integer(key) : fallback; }

  std::string string(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) throw ValidationError(where(key), "must be a string", "");
    return v.get<std::string>();
  }
  std::string string(const std::string& key, const std::string& fallback) { return has(key) ? string(key) : fallback; }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_boolean()) throw ValidationError(where(key), "must be true or false", "");
    return v.get<bool>();
  }

  void finish() const {
    for (const auto& [k, v] : j_.items())
      if (!seen_.count(k)) throw ValidationError(where(k), "is not a recognized field", "remove it or check the spelling");
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void require_positive(const Fields& f, const std::string& key, double x, const std::string& fix) {
  if (!(x > 0)) throw ValidationError(f.where(key), "must be > 0, got " + std::to_string(x), fix);
}

ps::HamiltonianSpec parse_hamiltonian(Fields f, std::string& potential_text) {
  potential_text = f.string("potential");
  const double mass = f.number("mass", 1.0);
  require_positive(f, "mass", mass, "use a positive mass such as 1");
  f.finish();
  algebra::ClassicalPolynomial v;
  try {
    v = algebra::parse_classical(potential_text, 1);
  } catch (const ParseError& e) {
    throw ValidationError(f.where("potential"), std::string("does not parse: ") + e.what(), "write a polynomial in q, e.g. \"q^4/4\"");
  } catch (const UnsupportedInputError& e) {
    throw ValidationError(f.where("potential"), e.what(), "write a polynomial in q, e.g. \"q^4/4\"");
  }
  try {
    return ps::HamiltonianSpec(v, mass);
  } catch (const std::exception& e) {
    throw ValidationError(f.where("potential"), e.what(), "use a polynomial V(q) of degree <= " +
                                                              std::to_string(ps::kMaxPotentialDegree));
  }
}

ps::PhaseSpaceGrid parse_grid(Fields f, double hbar) {
  const double q_min = f.number("q_min");
  const double q_max = f.number("q_max");
  if (!(q_max > q_min)) throw ValidationError(f.where("q_max"), "must exceed q_min", "");
  const bool aligned = f.boolean("aligned", false);
  auto size = [&f](const std::string& key) {
    const long long n = f.integer(key);
    if (n < 8 || n > (1 << 14) || (n & (n - 1)) != 0)
      throw ValidationError(f.where(key), "must be a power of two in 8..16384, got " + std::to_string(n), "use 256 or 512");
    return static_cast<int>(n);
  };
  if (aligned) {
    const int n = size("n");
    const double pc = f.number("p_center", 0.0);
    f.finish();
    return ps::aligned_grid(n, q_min, q_max, hbar, pc);
  }
  int nq;
  int np;
  if (f.has("n")) {
    nq = np = size("n");
  } else {
    nq = size("nq");
    np = size("np");
  }
  const double p_min = f.number("p_min");
  const double p_max = f.number("p_max");
  if (!(p_max > p_min)) throw ValidationError(f.where("p_max"), "must exceed p_min", "");
  f.finish();
  return ps::PhaseSpaceGrid(nq, np, q_min, q_max, p_min, p_max);
}

WavepacketSpec parse_wavepacket(Fields f, const WavepacketSpec& fallback) {
  WavepacketSpec w;
  w.q0 = f.number("q0", fallback.q0);
  w.p0 = f.number("p0", fallback.p0);
  w.sigma = f.number("sigma", fallback.sigma);
  require_positive(f, "sigma", w.sigma, "");
  f.finish();
  return w;
}

InitialSpec parse_initial(Fields f) {
  const bool g = f.has("gaussian");
  const bool p = f.has("product");
  if (g == p)
    throw ValidationError(f.where(""), "needs exactly one of \"gaussian\" or \"product\"", "");
  f.finish();
  if (g) {
    Fields h(f.raw("gaussian"), f.where("gaussian"));
    ps::GaussianParams out;
    out.q0 = h.number("q0", 0.0);
    out.p0 = h.number("p0", 0.0);
    out.sigma_q = h.number("sigma_q", 1.0);
    out.sigma_p = h.number("sigma_p", 1.0);
    out.angle = h.number("angle", 0.0);
    require_positive(h, "sigma_q", out.sigma_q, "");
    require_positive(h, "sigma_p", out.sigma_p, "");
    h.finish();
    return out;
  }
  Fields h(f.raw("product"), f.where("product"));
  ProductSpec out;
  out.psi = parse_wavepacket(Fields(h.raw("psi"), h.where("psi")), WavepacketSpec{});
  if (h.has("chi")) out.chi = parse_wavepacket(Fields(h.raw("chi"), h.where("chi")), WavepacketSpec{});
  h.finish();
  return out;
}

ps::Generator parse_generator_field(Fields& f, const std::string& key) {
  const std::string s = f.string(key);
  if (s == "liouville") return ps::Generator::kLiouville;
  if (s == "moyal") return ps::Generator::kMoyal;
  throw ValidationError(f.where(key), "must be \"liouville\" or \"moyal\", got \"" + s + "\"", "");
}

DiagnosticKind parse_kind(Fields& f) {
  const std::string s = f.string("kind");
  for (DiagnosticKind k : {DiagnosticKind::kNorm, DiagnosticKind::kEnergyTrace, DiagnosticKind::kSchmidt,
                           DiagnosticKind::kClassicalExpectations, DiagnosticKind::kFidelityVsOracle,
                           DiagnosticKind::kGeneratorEquivalence})
    if (s == to_string(k)) return k;
  throw ValidationError(f.where("kind"), "unknown diagnostic \"" + s + "\"",
                        "use one of norm, energy_trace, schmidt, classical_expectations, fidelity_vs_oracle, "
                        "generator_equivalence");
}

double default_tolerance(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::kNorm: return 1e-10;
    case DiagnosticKind::kEnergyTrace: return 1e-6;
    case DiagnosticKind::kSchmidt: return 1e-8;
    case DiagnosticKind::kClassicalExpectations: return std::numeric_limits<double>::infinity();
    case DiagnosticKind::kFidelityVsOracle: return 1e-6;
    case DiagnosticKind::kGeneratorEquivalence: return 1e-10;
  }
  return 0;
}

DiagnosticSpec parse_diagnostic(Fields f, int steps) {
  DiagnosticSpec d{parse_kind(f), 0.0, Expect::kSmall, std::nullopt, 1, {}, {}};
  d.tolerance = f.number("tolerance", default_tolerance(d.kind));
  require_positive(f, "tolerance", d.tolerance, "");
  const std::string expect = f.string("expect", "small");
  if (expect == "small") {
    d.expect = Expect::kSmall;
  } else if (expect == "nonzero") {
    d.expect = Expect::kNonzero;
  } else {
    throw ValidationError(f.where("expect"), "must be \"small\" or \"nonzero\"", "");
  }
  const bool sampled = d.kind == DiagnosticKind::kEnergyTrace || d.kind == DiagnosticKind::kSchmidt;
  if (sampled) {
    const long long every = f.integer("sample_every", d.kind == DiagnosticKind::kSchmidt ? 100 : 1);
    if (every < 1 || every > steps)
      throw ValidationError(f.where("sample_every"), "must be in 1..steps", "use a divisor of steps");
    d.sample_every = static_cast<int>(every);
  }
  if (d.kind == DiagnosticKind::kEnergyTrace && f.has("generator")) d.generator = parse_generator_field(f, "generator");
  if (d.kind == DiagnosticKind::kClassicalExpectations) {
    const json& list = f.raw("functions");
    if (!list.is_array() || list.empty())
      throw ValidationError(f.where("functions"), "must be a non-empty array of strings", "e.g. [\"q\", \"p^2/2 + q^2/2\"]");
    for (const json& s : list) {
      if (!s.is_string()) throw ValidationError(f.where("functions"), "entries must be strings", "");
      const std::string text = s.get<std::string>();
      try {
        d.parsed_functions.push_back(algebra::parse_classical(text, 1));
      } catch (const std::exception& e) {
        throw ValidationError(f.where("functions"), "\"" + text + "\": " + e.what(), "use polynomials in q and p");
      }
      d.functions.push_back(text);
    }
  }
  f.finish();
  return d;
}

bool needs_alignment(const DiagnosticSpec& d) {
  return d.kind == DiagnosticKind::kEnergyTrace || d.kind == DiagnosticKind::kSchmidt ||
         d.kind == DiagnosticKind::kFidelityVsOracle;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::string_view to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::kNorm: return "norm";
    case DiagnosticKind::kEnergyTrace: return "energy_trace";
    case DiagnosticKind::kSchmidt: return "schmidt";
    case DiagnosticKind::kClassicalExpectations: return "classical_expectations";
    case DiagnosticKind::kFidelityVsOracle: return "fidelity_vs_oracle";
    case DiagnosticKind::kGeneratorEquivalence: return "generator_equivalence";
  }
  return "?";
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Scenario parse_scenario(std::string_view text, std::string_view default_name) {
  json j;
  try {
    j = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto at = what.find("syntax error"); at != std::string::npos) what = what.substr(at);
    throw ParseError(what, line, column);
  }

  Fields f(j, "");
  const std::string name = f.string("name", std::string(default_name));
  if (name.empty() || name.find_first_of("/\\") != std::string::npos)
    throw ValidationError("name", "must be a non-empty file-name-safe string", "");

  const double hbar = f.number("hbar", 1.0);
  require_positive(f, "hbar", hbar, "use hbar = 1");
  std::string potential;
  ps::HamiltonianSpec hamiltonian = parse_hamiltonian(Fields(f.raw("hamiltonian"), "hamiltonian"), potential);
  ps::PhaseSpaceGrid grid = [&] {
    try {
      return parse_grid(Fields(f.raw("grid"), "grid"), hbar);
    } catch (const ValidationError&) {
      throw;
    } catch (const ConfigError& e) {
      throw ValidationError("grid", e.what(), "");
    }
  }();
  const ps::Generator generator = f.has("generator") ? parse_generator_field(f, "generator") : ps::Generator::kLiouville;
  InitialSpec initial = parse_initial(Fields(f.raw("initial"), "initial"));

  const double dt = f.number("dt");
  require_positive(f, "dt", dt, "set a positive time step such as 1e-3");
  const long long steps = f.integer("steps");
  if (steps < 1) throw ValidationError("steps", "must be >= 1, got " + std::to_string(steps), "");
  if (steps > 100000000) throw ValidationError("steps", "must be <= 1e8", "");
  const long long snapshot_every = f.integer("snapshot_every", 0);
  if (snapshot_every < 0) throw ValidationError("snapshot_every", "must be >= 0", "use 0 for initial and final only");

  std::vector<DiagnosticSpec> diagnostics;
  if (f.has("diagnostics")) {
    const json& list = f.raw("diagnostics");
    if (!list.is_array()) throw ValidationError("diagnostics", "must be an array", "");
    for (std::size_t i = 0; i < list.size(); ++i)
      diagnostics.push_back(parse_diagnostic(Fields(list[i], "diagnostics[" + std::to_string(i) + "]"),
                                             static_cast<int>(steps)));
  }
  const std::string output = f.string("output", "out/" + name);
  f.finish();

  const bool product = std::holds_alternative<ProductSpec>(initial);
  std::string reason;
  if (generator == ps::Generator::kMoyal) reason = "generator = moyal";
  else if (product) reason = "initial is a product state";
  for (std::size_t i = 0; i < diagnostics.size() && reason.empty(); ++i)
    if (needs_alignment(diagnostics[i])) reason = "diagnostic " + std::string(to_string(diagnostics[i].kind)) + " needs (Q,Qbar)";
  if (!reason.empty()) {
    const ps::ShearAlignment a = ps::check_shear_alignment(grid, hbar);
    if (!a.aligned)
      throw ValidationError("grid", a.message + " Required because " + reason + ".",
                            "or set \"aligned\": true with \"n\" to derive the p range");
  }
  std::set<std::string> seen_kinds;
  for (std::size_t i = 0; i < diagnostics.size(); ++i) {
    const DiagnosticSpec& d = diagnostics[i];
    std::string key(to_string(d.kind));
    if (d.kind == DiagnosticKind::kEnergyTrace) key += "/" + std::string(ps::to_string(d.generator.value_or(generator)));
    if (!seen_kinds.insert(key).second)
      throw ValidationError("diagnostics[" + std::to_string(i) + "]", "duplicates an earlier " + key + " diagnostic",
                            "merge the two entries");
    if (diagnostics[i].kind == DiagnosticKind::kFidelityVsOracle && (!product || generator != ps::Generator::kMoyal))
      throw ValidationError("diagnostics[" + std::to_string(i) + "]",
                            "fidelity_vs_oracle needs a product initial state and generator = moyal", "");
  }

  return Scenario{name,        fnv1a_hex(text),      potential,
                  std::move(hamiltonian), grid, hbar,
                  generator,   std::move(initial),   dt,
                  static_cast<int>(steps), static_cast<int>(snapshot_every), std::move(diagnostics),
                  output};
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.stem().string());
}

}  // namespace kvn::runner
