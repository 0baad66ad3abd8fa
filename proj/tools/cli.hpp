#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperturan::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1, ///< a freeness or agreement check was violated
    exit_usage = 2,        ///< bad command line, bad input, or formula window not covered
    exit_capacity = 3,     ///< instance beyond the exact-computation caps
};

/// Runs one command. args excludes the program name. JSON goes to out, the
/// human summary and error messages to err; "--in -" reads from in.
auto dispatch(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
    -> int;

} // namespace hyperturan::cli
