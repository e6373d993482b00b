#ifndef TROPAZ_CLI_HPP
#define TROPAZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tropaz {

// Front door; returns the process exit code: 0 success, 2 validation error,
// 3 guard violation, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tropaz

#endif
