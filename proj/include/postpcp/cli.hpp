#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace postpcp::cli {

// Exit status: 0 success/true/found, 1 false/absent, 2 usage or parse error.
// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace postpcp::cli
