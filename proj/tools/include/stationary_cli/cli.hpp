#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stationary::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one subcommand. `args` excludes the program name. The one-line
/// summary goes to `out`, diagnostics to `err`. Output files are written
/// only when the whole command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stationary::cli
