#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sturmkit::cli {

// Executes one CLI invocation. Exit codes: 0 YES/success, 1 NO, 2 UNKNOWN,
// 3 runtime/parse error, 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturmkit::cli
