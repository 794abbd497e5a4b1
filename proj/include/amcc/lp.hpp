#pragma once

#include "amcc/rational.hpp"

#include <cstddef>
#include <vector>

namespace amcc {

enum class Sense { LessEqual, Equal, GreaterEqual };

// maximize objective . x  subject to  rows[i] . x (sense[i]) rhs[i],  x >= 0
struct LinearProgram {
    RationalVector objective;
    std::vector<RationalVector> rows;
    RationalVector rhs;
    std::vector<Sense> sense;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RationalVector assignment;
    std::size_t pivots = 0;
};

// Two-phase dense tableau simplex over exact rationals with Bland's rule for
// both entering and leaving choices, so it terminates on degenerate inputs.
// Throws InvalidArgument on inconsistent dimensions.
LpSolution simplex_solve(const LinearProgram& lp);

// True when x >= 0 and every constraint holds exactly.
bool satisfies(const LinearProgram& lp, const RationalVector& x);

} // namespace amcc
