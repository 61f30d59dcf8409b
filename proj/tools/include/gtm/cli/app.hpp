#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gtm::cli {

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 mathematical mismatch, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtm::cli
