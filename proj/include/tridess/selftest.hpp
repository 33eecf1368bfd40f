#pragma once

#include <ostream>

namespace tridess {

/// Runs the full acceptance suite, printing one pass/fail line per criterion.
/// Returns the number of failed criteria (0 = all green). Setting the
/// environment variable DESSIN_SELFTEST_FAULT corrupts the frozen expectation
/// table, which must make the suite fail (a self-check of the harness).
int run_acceptance(std::ostream& os);

}  // namespace tridess
