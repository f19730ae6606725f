#pragma once

#include "sixcube/equation.hpp"

namespace sixcube {

// Exhaustive search for solutions with 1 <= x_i, X_i <= sextic_bound and
// 1 <= |y_i|, |Y_i| <= cubic_bound (zero entries are degenerate padding and
// excluded; sextic signs never matter). Trivial solutions are dropped,
// results are deduplicated under the display-normalization symmetry and
// returned as canonical representatives in lexicographic order.
//
// n = m = 1 uses a meet-in-the-middle sum table; other shapes scan nested
// loops, so the caller owns feasibility of the
// sextic_bound^(2n) * (2*cubic_bound)^(2m) box.
std::vector<IntegerSolution> brute_force(const EquationFamily& fam, long sextic_bound,
                                         long cubic_bound);

}  // namespace sixcube
