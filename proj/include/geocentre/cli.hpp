// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geocentre {

/// Exit codes of the `centroid` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDegenerate = 1,  ///< zero-area polygon or failed computation
  kExitInput = 2,       ///< bad arguments, unreadable or malformed input
};

/// Entry point of the `centroid` tool. `args` excludes the program name.
/// Reads the polygon from the named file, or from `in` when the path is
/// absent or "-". Writes the report to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace geocentre
