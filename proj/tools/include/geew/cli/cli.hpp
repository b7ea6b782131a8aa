#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geew::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_numerical = 1,   ///< evaluation failed (no convergence, overflow)
    exit_usage = 2,       ///< bad arguments, domain or divergence errors
    exit_verify_failed = 3,
};

/// Environment variable naming the default config file (TOML or INI).
inline constexpr const char* kConfigEnv = "GEEW_CONFIG";

/// Runs one command line (without the program name). Tables go to `out`
/// unless --output is given; diagnostics go to `err` only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geew::cli
