#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hamloc {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBadInput = 2;

/// Entry point of the `hamloc` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hamloc
