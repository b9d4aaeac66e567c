#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcf {

/// Executes one CLI invocation (argv without the program name) and writes a
/// single report document to `out`. Returns the process exit code:
/// 0 success, 1 verification assertion failed, 2 usage error,
/// 3 resource limit hit.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcf
