#ifndef NSBOUNDS_CLI_HPP
#define NSBOUNDS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nsb {

/// Runs one CLI invocation. `args` excludes the program name. Returns 0 on
/// success, 1 on usage errors, 2 when a verification subcommand fails its
/// tolerance.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsb

#endif
