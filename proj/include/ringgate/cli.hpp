#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringgate::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_degenerate = 3;

/// Entry point behind the `ringgate` executable. args excludes the program name.
/// Subcommands: tmatrix, scan, curves, lossless, compose, units.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace ringgate::cli
