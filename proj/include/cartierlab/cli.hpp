#ifndef CARTIERLAB_CLI_HPP
#define CARTIERLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cartierlab {

/// Run the command line given argv-style arguments (without the program
/// name). Returns the process exit code: 0 success, 1 verification failure,
/// 2 usage or input error. Output is deterministic per (args, seed).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartierlab

#endif
