#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpoly::cli {

/// Exit codes: 0 success, 1 domain error or failed verification, 2 parse error.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpoly::cli
