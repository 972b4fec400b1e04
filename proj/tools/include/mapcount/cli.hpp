#pragma once

#include <iosfwd>

namespace mapcount::cli {

// Runs the command line against the given streams. Exit codes: 0 success,
// 1 usage error, 2 invalid input, 3 verification failure, 4 resource limit.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace mapcount::cli
