#pragma once

#include <ostream>

namespace amalgam::cli {

// Exit codes: 0 success, 2 parse or domain error, 3 budget exhausted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;
inline constexpr int kExitBudget = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace amalgam::cli
