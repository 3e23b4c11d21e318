#pragma once

#include <iosfwd>

namespace dpqs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `dpqs` tool. Subcommands: sort, exact, exhaustive,
// partition, mc, scatter, urn, rde, tollmoments.
int cli_dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dpqs
