#include "amcc/linear_algebra.hpp"

#include "amcc/errors.hpp"

namespace amcc {

namespace {

std::size_t height(const Rational& r) {
    return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

} // namespace

RowEchelon row_reduce(std::vector<RationalVector> augmented, std::size_t variables) {
    for (const auto& row : augmented) {
        if (row.size() < variables) {
            throw InvalidArgument("row shorter than variable count");
        }
    }
    RowEchelon out;
    std::size_t rank = 0;
    std::vector<std::size_t> support;
    for (std::size_t col = 0; col < variables && rank < augmented.size(); ++col) {
        std::size_t best = augmented.size();
        for (std::size_t r = rank; r < augmented.size(); ++r) {
            if (sgn(augmented[r][col]) != 0 && (best == augmented.size() ||
                                                height(augmented[r][col]) < height(augmented[best][col]))) {
                best = r;
            }
        }
        if (best == augmented.size()) {
            continue;
        }
        std::swap(augmented[rank], augmented[best]);
        RationalVector& prow = augmented[rank];
        const Rational inv = 1 / prow[col];
        support.clear();
        for (std::size_t j = 0; j < prow.size(); ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                support.push_back(j);
            }
        }
        for (std::size_t r = 0; r < augmented.size(); ++r) {
            if (r == rank || sgn(augmented[r][col]) == 0) {
                continue;
            }
            const Rational f = augmented[r][col];
            for (std::size_t j : support) {
                augmented[r][j] -= f * prow[j];
            }
        }
        out.pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < augmented.size(); ++r) {
        for (std::size_t j = variables; j < augmented[r].size(); ++j) {
            if (sgn(augmented[r][j]) != 0) {
                out.consistent = false;
            }
        }
    }
    augmented.resize(rank);
    out.rows = std::move(augmented);
    return out;
}

std::size_t rank(const std::vector<RationalVector>& rows) {
    if (rows.empty()) {
        return 0;
    }
    return row_reduce(rows, rows.front().size()).pivots.size();
}

} // namespace amcc
