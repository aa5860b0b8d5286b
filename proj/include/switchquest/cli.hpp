#pragma once

#include <iosfwd>

namespace switchquest {

/// Entry point of the `switchquest` tool. Exit status: 0 success, 1 failed
/// verification, 2 usage, input or protocol error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace switchquest
