#pragma once

#include <iosfwd>

namespace skewres::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line tool. Exit codes: 0 when every check passes, 1 on a
/// failed mathematical check or an exhausted time budget, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skewres::cli
