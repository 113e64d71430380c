// Command-line front end: info, ring, milnor, verify, scan.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lgm {

inline constexpr std::int64_t kMinExponent = 2;
inline constexpr std::int64_t kMaxExponent = 64;

enum ExitCode : int { kVerified = 0, kVerificationFailed = 1, kInvalidInput = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgm
