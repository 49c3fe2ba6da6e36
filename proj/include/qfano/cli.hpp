#pragma once

#include <iosfwd>

namespace qfano {

// Full command-line surface (subcommands bounds, sweep, optimize, verify),
// funneled through explicit streams so tests can drive it in-process.
// Returns the process exit code: 0 success, 1 usage error, 2 input
// validation failure, 3 property or consistency violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfano
