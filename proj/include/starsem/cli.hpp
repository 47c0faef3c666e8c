#ifndef STARSEM_CLI_HPP
#define STARSEM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace starsem::cli {

/// Runs the command line tool on `args` (without the program name), writing
/// reports to `out` and diagnostics to `err`. Returns the process exit code:
/// 0 when all requested verifications pass, 1 when a verification found a
/// mismatch, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace starsem::cli

#endif  // STARSEM_CLI_HPP
