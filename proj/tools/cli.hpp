#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace setsys::cli {

// Full command-line entry point, separated from main() so tests can drive it.
// Returns the process exit code: 0 on success, 1 when a verification or bound
// check fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setsys::cli
