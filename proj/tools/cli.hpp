#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sailkit::cli {

// Exit codes: 0 success, 1 internal error, 2 input error, 3 resource
// limit, 4 inconclusive. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sailkit::cli
