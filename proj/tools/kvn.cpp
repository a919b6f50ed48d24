// kvn: command-line front end for the algebra checks and phase-space runs.
//
// Exit codes: 0 all checks pass, 1 a check failed (report still written),
// 2 bad input (parse, validation, configuration), 3 I/O failure.

#include <cstdio>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "kvn/errors.hpp"
#include "kvn/runner/algebra_checks.hpp"
#include "kvn/runner/commands.hpp"
#include "kvn/runner/scenario.hpp"

namespace {

int finish(const kvn::runner::RunReport& r) {
  std::cout << r.text();
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"KvN phase-space toolkit"};
  app.require_subcommand(1);

  kvn::runner::VerifyAlgebraOptions va;
  std::string report_path;
  auto* verify = app.add_subcommand("verify-algebra", "exact operator identity suite");
  verify->add_option("--ndof", va.ndof, "degrees of freedom for the Heisenberg and random checks")->capture_default_str();
  verify->add_option("--max-degree", va.max_degree, "degree bound of the random Hamiltonians")->capture_default_str();
  verify->add_option("--seed", va.seed, "seed of the random Hamiltonians")->capture_default_str();
  verify->add_option("--samples", va.samples, "number of random Hamiltonians")->capture_default_str();
  verify->add_option("--report", report_path, "also write the report to this file");

  std::string scenario_path;
  std::string out_dir;
  auto* simulate = app.add_subcommand("simulate", "run a scenario file");
  simulate->add_option("scenario", scenario_path, "scenario file (JSON with comments)")->required();
  simulate->add_option("--out", out_dir, "output directory (default: the scenario's output field)");

  std::string a;
  std::string b;
  double tol = 0;
  bool expect_different = false;
  auto* compare = app.add_subcommand("compare", "distance between two snapshots");
  compare->add_option("a", a, "first snapshot")->required();
  compare->add_option("b", b, "second snapshot")->required();
  compare->add_option("--tol", tol, "tolerance on the max-norm distance")->required();
  compare->add_flag("--expect-different", expect_different, "pass iff the distance exceeds --tol");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      const kvn::runner::RunReport r = kvn::runner::verify_algebra(va);
      if (!report_path.empty()) {
        std::FILE* f = std::fopen(report_path.c_str(), "wb");
        if (!f) throw kvn::IoError("cannot write " + report_path);
        const std::string text = r.text();
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
      }
      return finish(r);
    }
    if (*simulate) {
      const kvn::runner::Scenario s = kvn::runner::load_scenario(scenario_path);
      return finish(kvn::runner::simulate(s, out_dir));
    }
    return finish(kvn::runner::compare_snapshots(a, b, tol, expect_different));
  } catch (const kvn::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
