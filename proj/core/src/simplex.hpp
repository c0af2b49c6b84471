#pragma once

#include <vector>

#include "elect/rational.hpp"

namespace elect::detail {

// maximize objective . x  subject to  rows[i] . x == rhs[i],  x >= 0
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;
};

struct SimplexResult {
    bool feasible = false;
    bool bounded = true;
    Rational value;
    std::vector<Rational> solution;
};

// Two-phase primal simplex over exact rationals, Bland's rule throughout
// (finite termination, no cycling).
SimplexResult solve_lp(const LinearProgram& lp);

}  // namespace elect::detail
