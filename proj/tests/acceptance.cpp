// Acceptance runner: one PASS/FAIL line per criterion. `--long` also runs
// the parts gated behind --allow-long in the CLI.

#include <cstring>
#include <iostream>

#include "fingeo/suite.hpp"

int main(int argc, char** argv) {
  fingeo::SuiteOptions o;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) o.allow_long = true;
    else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) o.workers = std::atoi(argv[++i]);
    else o.only.insert(std::atoi(argv[i]));
  }
  int failed = 0;
  for (const auto& r : fingeo::run_suite(o)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " C" << r.id << " " << r.name << " (" << static_cast<long>(r.ms) << " ms)"
              << (r.long_skipped ? " [long parts skipped]" : "") << "\n    " << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing criteria, seed " << o.seed << "\n";
  return failed ? 1 : 0;
}
