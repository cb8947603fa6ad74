#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dio {

// Exit codes: 0 solution / normal completion, 1 no solution, 2 usage or
// input error, 3 environment failure (timer).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dio
