#pragma once

#include <ostream>

namespace plabic::cli {

// Exit codes: 0 all requested checks pass, 1 verification failure or
// computation error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace plabic::cli
