// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <cstdio>

#include "mgamma/checks.hpp"

int main() {
  const auto results = mgamma::checks::run_suite("acceptance");
  int failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    std::printf("%s  %-42s residual=%.3e tolerance=%.3e\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.residual, r.tolerance);
  }
  std::printf("%zu/%zu acceptance criteria passed\n", results.size() - failures, results.size());
  return failures == 0 ? 0 : 1;
}
