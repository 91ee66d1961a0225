#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksb {

/// Runs one CLI invocation. `args` excludes the program name. Exit codes:
/// 0 success, 1 computation or input error (a structured error record is
/// written to `out`) or a failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

/// "a..b" or "a"; throws std::invalid_argument on anything else.
std::pair<unsigned, unsigned> parse_m_range(const std::string& s);

}  // namespace ksb
