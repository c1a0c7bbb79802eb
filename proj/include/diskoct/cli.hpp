#pragma once

#include <iosfwd>

namespace diskoct {

// Exit codes: 0 success, 1 verification or acceptance failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (argv[0] is the program name).
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diskoct
