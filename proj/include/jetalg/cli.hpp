#ifndef JETALG_CLI_HPP
#define JETALG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace jetalg {

// Dispatches a CLI invocation. Returns 0 on success, 1 when a requested
// check fails, 2 on usage or input errors. All output is deterministic for
// a fixed argument vector (randomized suites take an explicit seed).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jetalg

#endif
