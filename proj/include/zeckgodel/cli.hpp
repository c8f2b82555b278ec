#ifndef ZECKGODEL_CLI_HPP_
#define ZECKGODEL_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace zg {

// Runs the `zgodel` command line. `args` excludes the program name.
// Returns 0 on success, 1 on a domain error (a JSON error object is written
// to `err`), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zg

#endif  // ZECKGODEL_CLI_HPP_
