#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cliffsub::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

/// Run one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffsub::cli
