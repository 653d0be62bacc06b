#ifndef NOMRW_CLI_HPP
#define NOMRW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nomrw {

/// Runs one command; `args` excludes the program name. Returns 0 for a
/// positive verdict, 1 for a negative one and 2 for usage, parse or
/// configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nomrw

#endif  // NOMRW_CLI_HPP
