#pragma once

// Subcommands of the `mixwidth` tool. Exit codes: 0 ok, 2 usage error,
// 3 mathematical precondition violated (e.g. a rigid tuple passed to sweep).

#include <iosfwd>
#include <string>
#include <vector>

namespace mixwidth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

/// Fixed header of `sweep --format csv`.
inline constexpr const char* kSweepCsvHeader =
    "s,b,d,k,r,l,dim,d0,sup_sampled_error,ratio,certified_bound";

/// args excludes the program name, e.g. {"classify", "--p1", "inf", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixwidth::cli
