#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the pqappell binary. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqa::cli
