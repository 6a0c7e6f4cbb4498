#ifndef ALGAME_CLI_HPP
#define ALGAME_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace algame {

/// Runs the command line interface. `args` excludes the program name.
/// Exit codes: 0 success, 1 failed verification, 2 parse error,
/// 3 unsupported operation, 4 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace algame

#endif
