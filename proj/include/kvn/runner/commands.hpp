#pragma once

#include <filesystem>
#include <optional>

#include "kvn/runner/report.hpp"
#include "kvn/runner/scenario.hpp"

namespace kvn::runner {

// Runs the scenario and writes into `out_dir` (scenario.output when empty):
//   initial.bin, final.bin, step_<k>.bin     state snapshots in (q, p)
//   final_q.csv, final_p.csv                 marginals
//   energy_<generator>.csv                   t,value
//   schmidt_trace.csv, schmidt.csv           t,value and k,sigma_k
//   classical_expectations.csv               f,initial,final
//   final_<other generator>.bin              generator_equivalence only
//   report.txt, timings.txt
// Diagnostic failures are report entries. Throws ConfigError (including
// ValidationError) for states the grid cannot hold, IoError for files.
RunReport simulate(const Scenario& scenario, const std::filesystem::path& out_dir = {});

// Max-norm and L2 distance between two snapshots. With expect_different the
// check passes iff the max-norm distance exceeds `tolerance`. ConfigError if
// the headers (representation, grid, hbar) differ.
RunReport compare_snapshots(const std::filesystem::path& a, const std::filesystem::path& b, double tolerance,
                            bool expect_different = false);

}  // namespace kvn::runner
