#pragma once

#include "amcc/rational.hpp"

#include <cstddef>
#include <vector>

namespace amcc {

// Reduced row echelon form of an augmented system [A | b] with `variables`
// columns in A. Rows beyond `pivots.size()` are dropped.
struct RowEchelon {
    std::vector<RationalVector> rows;
    std::vector<std::size_t> pivots;
    bool consistent = true;
};

// Exact Gauss-Jordan elimination. Among candidate pivot rows it takes the one
// whose pivot entry has the smallest numerator+denominator bit size.
RowEchelon row_reduce(std::vector<RationalVector> augmented, std::size_t variables);

std::size_t rank(const std::vector<RationalVector>& rows);

} // namespace amcc
