#pragma once

#include <ostream>

namespace gasket {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitPrecision = 3;

// Runs one subcommand; results go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gasket
