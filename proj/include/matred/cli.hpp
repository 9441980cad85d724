#ifndef MATRED_CLI_HPP
#define MATRED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace matred {

/// Runs one CLI invocation (args exclude the program name) and returns the
/// process exit code: 0 success, 2 invalid input, 3 verification mismatch,
/// 4 cap exceeded, 5 incomplete integer factorization.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace matred

#endif
