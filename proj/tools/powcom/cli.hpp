#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powcom::cli {

/// Exit codes. kInconsistent is reserved for a failed mathematical check so
/// the tool can guard CI runs.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInconsistent = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powcom::cli
