#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccperm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCounterexample = 1,
  kMalformedInput = 2,
  kLimitOrOverflow = 3,
};

// Environment variable that overrides the enumeration guard when --max-n is
// not given.
inline constexpr const char* kMaxNEnv = "CCPERM_MAX_N";

// Runs one invocation. `args` excludes the program name. Machine output goes
// to `out`, diagnostics to `err`; `in` is read when no input argument or file
// is given.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err,
        std::optional<std::string> env_max_n = std::nullopt);

}  // namespace ccperm::cli
