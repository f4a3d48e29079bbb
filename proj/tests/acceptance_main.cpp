// Acceptance gate: prints one pass/fail line per criterion, all criteria by
// default or a single one given its number (1-10) as the only argument.
// Exits 0 iff every criterion that ran passed.
#include <cstdlib>
#include <iostream>
#include <string>

#include "charnum/verify.hpp"

int main(int argc, char** argv) {
  using namespace charnum::verify;
  const auto& names = suite_names();
  const int n = static_cast<int>(names.size());
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > n) {
      std::cerr << "usage: acceptance [1.." << n << "]\n";
      return 2;
    }
  }
  bool all_ok = true;
  for (int i = 1; i <= n; ++i) {
    if (only != 0 && i != only) continue;
    SuiteResult r;
    try {
      r = run_suite(names[i - 1]);
    } catch (const std::exception& e) {
      std::cout << "criterion " << i << "  FAIL  " << names[i - 1]
                << " — exception: " << e.what() << "\n";
      all_ok = false;
      continue;
    }
    std::cout << "criterion " << i << "  " << r.summary_line() << "\n";
    if (!r.pass()) {
      all_ok = false;
      for (const auto& c : r.checks)
        if (!c.pass)
          std::cout << "          failed: " << c.name << ": " << c.detail
                    << "\n";
    }
  }
  return all_ok ? 0 : 1;
}
