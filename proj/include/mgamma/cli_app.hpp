#ifndef MGAMMA_CLI_APP_HPP
#define MGAMMA_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mgamma::cli {

/// Run the command-line interface on the given arguments (without argv[0]).
/// Exit codes: 0 success, 1 parse/domain error (message on err),
/// 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgamma::cli

#endif  // MGAMMA_CLI_APP_HPP
