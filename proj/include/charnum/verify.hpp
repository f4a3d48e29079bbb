#pragma once

#include <string>
#include <vector>

namespace charnum::verify {

// One exact check inside a suite.  `detail` carries the computed value on
// success and a got/expected diff on failure.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// One verification suite; the ten suites correspond one-to-one to the
// acceptance criteria, in order.
struct SuiteResult {
  std::string name;
  std::string criterion;  // one-line statement of what the suite certifies
  std::vector<CheckResult> checks;

  bool pass() const;
  // Multi-line report: one line per check, prefixed PASS/FAIL.
  std::string str() const;
  // Single summary line: "PASS  name — criterion" or the first failure.
  std::string summary_line() const;
};

// The suite names in criterion order (1-based index == criterion number).
const std::vector<std::string>& suite_names();

// Runs one suite; throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name);

// Runs every suite in order.
std::vector<SuiteResult> run_all();

}  // namespace charnum::verify
