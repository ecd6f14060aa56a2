#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tlab {

// Whole CLI as a function of its arguments (program name excluded), so tests
// drive it in-process.  Exit codes: 0 ok, 1 verifier violation under met
// hypotheses, 2 usage error, 3 budget exceeded / inconclusive estimate.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tlab
