#ifndef CONFSPACE_CLI_HPP
#define CONFSPACE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace confspace {

// Exit codes: 0 success / all verdicts confirmed, 1 domain failure or a
// violated verdict, 2 I/O or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitIo = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confspace

#endif  // CONFSPACE_CLI_HPP
