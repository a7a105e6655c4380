#pragma once

#include <ostream>

namespace scatlab::cli {

// Exit codes: 0 ok, 2 precondition / usage error, 3 internal inconsistency.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Order cap; SCATTER_MAX_ORDER overrides the default.
int max_order();

} // namespace scatlab::cli
