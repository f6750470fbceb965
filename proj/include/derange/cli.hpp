#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace derange::cli {

// exit codes: 0 success / all rows pass, 1 sweep failure, 2 invalid input,
// 3 resource cap exceeded
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace derange::cli
