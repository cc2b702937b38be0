#pragma once

#include <ostream>

namespace risim {

/// Command-line entry point. Returns 0 on success, 2 on usage or configuration
/// errors, 1 on any other failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace risim
