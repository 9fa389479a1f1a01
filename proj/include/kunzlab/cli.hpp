#pragma once

#include <ostream>

namespace kunzlab::cli {

/// Runs one command line. Returns 0 on success, 1 when a verification suite
/// fails and 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kunzlab::cli
