// Command-line dispatch, factored out of main() so reports can be exercised
// in-process by the tests.
#pragma once

#include <string>
#include <vector>

namespace g12 {

// Runs one CLI invocation; returns the process exit code (0 success,
// 1 domain error, 2 internal inconsistency) and fills `out` with the report.
int run_cli(const std::vector<std::string>& args, std::string* out,
            std::string* err);

}  // namespace g12
