#pragma once

#include <iosfwd>

namespace cqs::cli {

// Full command-line surface (info | quiver | ext | tor | check | render).
// Returns the process exit code: 0 success, 1 failed verification check,
// 2 invalid parameters, 3 unwritable output.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cqs::cli
