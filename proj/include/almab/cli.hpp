#ifndef ALMAB_CLI_HPP
#define ALMAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace almab {

namespace exit_status {
constexpr int ok = 0;
constexpr int usage = 1;            ///< bad arguments, parse errors, invalid models
constexpr int not_classified = 2;   ///< classify: no complex structure
constexpr int verify_failed = 3;
} // namespace exit_status

/// Runs the almab command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace almab

#endif
