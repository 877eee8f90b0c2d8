#ifndef QOSROUTE_CLI_H_
#define QOSROUTE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace qosroute {

// Entry point behind the `qosroute` binary. `args` excludes the program
// name. Reports go to `out`, diagnostics to `err`.
//
// Returns 0 on success, 1 when `compare` finds claim violations and 2 on bad
// arguments or unreadable input.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace qosroute

#endif  // QOSROUTE_CLI_H_
