#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amalgam::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUndecided = 2;  // OutsideHypothesis / OpenInPaper
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataFormat = 65;
inline constexpr int kExitInternal = 70;

/// Parses and executes one command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,2,4,8", "2..8" (unit step) or "1..64:x2" (geometric).
std::vector<double> parse_sweep(const std::string& text);

}  // namespace amalgam::cli
