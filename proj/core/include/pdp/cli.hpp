#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdp::cli {

// Executes one subcommand (count | decide | search | edpp | gen | oracle |
// selftest). Machine-readable line-delimited JSON goes to `out`, a human
// summary to `err`. Returns the process exit code:
//   0 success / positive decision
//   1 no solution / negative decision / failed randomized trial
//   2 invalid input
//   3 internal inconsistency
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pdp::cli
