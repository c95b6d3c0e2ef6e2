#ifndef CFC_TOOLS_CLI_HPP
#define CFC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cfc::cli {

enum ExitCode : int {
    ok = 0,
    verdict_false = 1,
    input_error = 2,
    scale_exceeded = 3,
    internal_error = 4,
};

/// Runs one command. `args` excludes the program name; a file argument of
/// "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace cfc::cli

#endif // CFC_TOOLS_CLI_HPP
