#pragma once

#include <ostream>

namespace coxcone {

// Runs one `coxcone` invocation. JSON goes to `out`, diagnostics to `err`.
// Returns 0 on success or membership, 1 on non-membership, 2 on usage or
// input errors and 3 on internal errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxcone
