#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace akb {

// Parses and executes one CLI invocation (args excludes the program name).
// Returns 0 on success, 2 when the enumeration guard trips, 1 otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace akb
