#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsrg {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Runs one command line (args excludes the program name). Graph and report
/// output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace dsrg
