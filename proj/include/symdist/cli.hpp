#pragma once

#include <iosfwd>

namespace symdist {

inline constexpr int kDefaultMaxRank = 12;
inline constexpr const char* kMaxRankVariable = "SYMDIST_MAX_RANK";

/// Command-line entry point. Exit codes: 0 success, 1 model violation or
/// failed check, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symdist
