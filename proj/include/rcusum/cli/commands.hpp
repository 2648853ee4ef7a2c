#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcusum::cli {

inline constexpr int kExitNoReject = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitError = 2;

/// Entry point of the rank_cusum tool. args[0] is the program name.
/// Returns 0 (no rejection / success), 1 (some selected test rejects) or 2 (error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcusum::cli
