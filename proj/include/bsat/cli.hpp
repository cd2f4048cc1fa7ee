#ifndef BSAT_CLI_HPP
#define BSAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bsat::cli {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit status: 0 success, 1 negative verify verdict, 2 usage or
// input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bsat::cli

#endif
