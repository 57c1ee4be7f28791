#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cxd {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// The cxdist command line. args excludes the program name. Results go to
// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cxd
