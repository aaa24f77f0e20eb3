#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goldman {

/// Command-line front end; returns the process exit code.
/// 0 success, 2 usage/parse errors, 3 domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldman
