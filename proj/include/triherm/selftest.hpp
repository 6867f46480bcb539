#pragma once

#include <ostream>

namespace triherm {

// Cross-module consistency suite: exercises the algebra, the group action,
// the invariant, the finite-field model, the zeta numerics, the box count,
// and the pole-table assembly against each other and against frozen small
// cases.  Prints one line per check ("ok - ..." or "FAIL - ...") and returns
// the number of failures.  Deterministic and fast enough for routine use.
int run_selftest(std::ostream& out);

}  // namespace triherm
