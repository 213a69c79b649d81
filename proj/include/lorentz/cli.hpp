#pragma once

#include <iosfwd>
#include <string>

namespace lorentz {

// Dispatch one subcommand on a JSON document; writes the result (or a
// structured error object) to `out`. Returns the process exit status:
// 0 success, 1 domain error, 2 malformed input.
int run_command(const std::string& subcommand, std::istream& in, std::ostream& out,
                const std::string& format = "");

}  // namespace lorentz
