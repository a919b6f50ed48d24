#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kvn::runner {

// kSmall: the measured quantity must stay within tolerance.
// kNonzero: it must exceed it (a negative result asserted as a success).
enum class Expect { kSmall, kNonzero };

struct Check {
  std::string name;
  bool within = false;  // measured value within tolerance
  Expect expect = Expect::kSmall;
  std::string detail;

  bool ok() const { return expect == Expect::kSmall ? within : !within; }
  // "PASS", "FAIL", "PASS (expected-nonzero)", "FAIL (expected-nonzero)".
  std::string status() const;
};

struct RunReport {
  std::string title;
  std::vector<std::pair<std::string, std::string>> preamble;
  std::vector<Check> checks;
  // Wall-clock seconds; kept out of text() so that reports are reproducible.
  std::vector<std::pair<std::string, double>> timings;

  bool ok() const;
  std::string text() const;
  std::string timings_text() const;
};

// %.3e, the format used for measured values in report lines.
std::string sci(double x);

}  // namespace kvn::runner
