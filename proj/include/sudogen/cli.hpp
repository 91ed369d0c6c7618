#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sudogen::cli {

// Runs one command line (program name excluded) against the given streams.
// Returns the process exit code: 0 for success or a valid input, 1 for
// invalid input, 2 for a refusal or an exhausted search budget, 3 for
// usage errors.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace sudogen::cli
