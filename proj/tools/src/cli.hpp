#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dd2::cli {

/// Runs one dd2 command. `args` excludes the program name. Returns 0 for a
/// positive answer, 1 for a negative one and 2 for usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dd2::cli
