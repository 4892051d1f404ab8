#ifndef POLYCAUCHY_CLI_APP_HPP
#define POLYCAUCHY_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polycauchy::cli {

/// Exit codes: 0 success, 1 identity failures, 2 usage or input error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failures = 1;
inline constexpr int exit_usage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace polycauchy::cli

#endif
