#pragma once

#include <iosfwd>

namespace qgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPairsFound = 3;

/// Entry point of the qgraph tool. Data goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgraph
