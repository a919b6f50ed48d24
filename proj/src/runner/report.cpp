#include "kvn/runner/report.hpp"

#include <cstdio>

namespace kvn::runner {

std::string Check::status() const {
  std::string s = ok() ? "PASS" : "FAIL";
  if (expect == Expect::kNonzero) s += " (expected-nonzero)";
  return s;
}

bool RunReport::ok() const {
  for (const Check& c : checks)
    if (!c.ok()) return false;
  return true;
}

std::string RunReport::text() const {
  std::string out = title + "\n";
  for (const auto& [k, v] : preamble) out += k + ": " + v + "\n";
  out += "\n";
  int failed = 0;
  for (const Check& c : checks) {
    out += c.status() + "  " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
    if (!c.ok()) ++failed;
  }
  out += "\n" + std::string(failed == 0 ? "RESULT PASS" : "RESULT FAIL") + " (" +
         std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks ok)\n";
  return out;
}

std::string RunReport::timings_text() const {
  std::string out = "stage,seconds\n";
  char buf[64];
  for (const auto& [k, v] : timings) {
    std::snprintf(buf, sizeof buf, "%.3f", v);
    out += k + "," + buf + "\n";
  }
  return out;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace kvn::runner
