#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pottslist {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_parse_error = 2,
    exit_precondition = 3,
};

/// Runs one command. args excludes the program name. Results go to out as a single
/// JSON (or CSV) document; diagnostics go to err. Graph input is read from the
/// positional path, or from in when it is absent or "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pottslist
