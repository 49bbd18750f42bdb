#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dvf::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitMathError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dvf::cli
