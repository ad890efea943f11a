#ifndef SIGBASIS_TOOLS_DRIVER_HPP
#define SIGBASIS_TOOLS_DRIVER_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sigbasis::cli {

enum ExitCode : int { ok = 0, usage = 1, verification_failed = 2, limit_breach = 3 };

/// Entry point of the sigbasis tool. args excludes the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sigbasis::cli

#endif
