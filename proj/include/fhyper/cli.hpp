#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fhyper::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line (args excludes the program name). All report output
// is buffered and written to `out` once; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace fhyper::cli
