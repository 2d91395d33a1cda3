#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phaselab::cli {

/// Runs one CLI invocation. Returns the process exit code: 0 on success,
/// 1 for computation failures and negative results, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phaselab::cli
