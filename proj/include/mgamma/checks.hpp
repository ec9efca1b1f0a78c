#ifndef MGAMMA_CHECKS_HPP
#define MGAMMA_CHECKS_HPP

#include <string>
#include <vector>

namespace mgamma::checks {

struct CheckResult {
  std::string suite;
  std::string name;
  double residual = 0.0;   // worst sub-check residual
  double tolerance = 0.0;  // its tolerance (0 for exact checks)
  bool pass = false;
};

std::vector<std::string> available_suites();  // identities, oracle, acceptance, all

/// Run every check of the suite in registration order.  A check that throws
/// is reported as failed.  Throws std::invalid_argument for unknown suites.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace mgamma::checks

#endif  // MGAMMA_CHECKS_HPP
