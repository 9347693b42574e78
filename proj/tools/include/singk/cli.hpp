#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it with string streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "singk/error.hpp"

namespace singk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailure = 3;

/// Usage and input errors map to 2, internal consistency failures to 3.
int exit_code_for(ErrorCode code) noexcept;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singk::cli
