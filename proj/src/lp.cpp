#include "amcc/lp.hpp"

#include "amcc/errors.hpp"

#include <limits>

namespace amcc {

const char* to_string(LpStatus status) {
    switch (status) {
    case LpStatus::Optimal:
        return "optimal";
    case LpStatus::Infeasible:
        return "infeasible";
    case LpStatus::Unbounded:
        return "unbounded";
    }
    return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Tableau in canonical form: for every row r, column basis[r] is a unit
// column. The objective row holds reduced costs and, in its last entry, the
// current objective value.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : cols_(cols), cells_(rows, RationalVector(cols + 1, Rational{0})), objective_(cols + 1, Rational{0}),
          basis_(rows, kNone) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
    Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
    const Rational& value() const { return objective_[cols_]; }
    std::vector<std::size_t>& basis() { return basis_; }
    std::size_t rows() const { return cells_.size(); }
    std::size_t pivots() const { return pivots_; }

    // Loads "maximize costs . x" and prices out the current basis.
    void set_objective(const RationalVector& costs) {
        for (std::size_t j = 0; j <= cols_; ++j) {
            objective_[j] = j < costs.size() ? Rational{-costs[j]} : Rational{0};
        }
        for (std::size_t r = 0; r < rows(); ++r) {
            const Rational f = objective_[basis_[r]];
            if (sgn(f) == 0) {
                continue;
            }
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (sgn(cells_[r][j]) != 0) {
                    objective_[j] -= f * cells_[r][j];
                }
            }
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        ++pivots_;
        RationalVector& prow = cells_[r];
        const Rational inv = 1 / prow[c];
        support_.clear();
        for (std::size_t j = 0; j <= cols_; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                support_.push_back(j);
            }
        }
        for (std::size_t k = 0; k < rows(); ++k) {
            if (k != r) {
                eliminate(cells_[k], prow, c);
            }
        }
        eliminate(objective_, prow, c);
        basis_[r] = c;
    }

    // Bland: lowest-index column with negative reduced cost among [0, limit).
    std::size_t entering(std::size_t limit) const {
        for (std::size_t j = 0; j < limit; ++j) {
            if (sgn(objective_[j]) < 0) {
                return j;
            }
        }
        return kNone;
    }

    // Minimum ratio; ties go to the row whose basic variable has the lowest
    // index.
    std::size_t leaving(std::size_t c) const {
        std::size_t best = kNone;
        Rational best_ratio;
        for (std::size_t r = 0; r < rows(); ++r) {
            const Rational& a = cells_[r][c];
            if (sgn(a) <= 0) {
                continue;
            }
            Rational ratio = cells_[r][cols_] / a;
            if (best == kNone || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[best])) {
                best = r;
                best_ratio = std::move(ratio);
            }
        }
        return best;
    }

    // Pivots until optimal (true) or an unbounded ray is found (false).
    bool optimize(std::size_t limit) {
        for (;;) {
            const std::size_t c = entering(limit);
            if (c == kNone) {
                return true;
            }
            const std::size_t r = leaving(c);
            if (r == kNone) {
                return false;
            }
            pivot(r, c);
        }
    }

    void erase_row(std::size_t r) {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    // target -= target[c] * prow, touching only the pivot row's support.
    void eliminate(RationalVector& target, const RationalVector& prow, std::size_t c) {
        if (sgn(target[c]) == 0) {
            return;
        }
        const Rational f = target[c];
        for (std::size_t j : support_) {
            target[j] -= f * prow[j];
        }
    }

    std::size_t cols_;
    std::vector<RationalVector> cells_;
    RationalVector objective_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> support_;
    std::size_t pivots_ = 0;
};

void check_dimensions(const LinearProgram& lp) {
    const std::size_t n = lp.objective.size();
    if (lp.rows.size() != lp.rhs.size() || lp.rows.size() != lp.sense.size()) {
        throw InvalidArgument("constraint rows, rhs and senses have different lengths");
    }
    for (const auto& row : lp.rows) {
        if (row.size() != n) {
            throw InvalidArgument("constraint row length does not match variable count");
        }
    }
}

} // namespace

LpSolution simplex_solve(const LinearProgram& lp) {
    check_dimensions(lp);
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rows.size();

    // Normalize to rhs >= 0, flipping the sense of negated rows.
    std::vector<Sense> sense = lp.sense;
    std::vector<int> sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(lp.rhs[i]) < 0) {
            sign[i] = -1;
            if (sense[i] == Sense::LessEqual) {
                sense[i] = Sense::GreaterEqual;
            } else if (sense[i] == Sense::GreaterEqual) {
                sense[i] = Sense::LessEqual;
            }
        }
    }

    // Column layout: originals | slack/surplus | artificials.
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (Sense s : sense) {
        slack_count += s != Sense::Equal ? 1 : 0;
        artificial_count += s != Sense::LessEqual ? 1 : 0;
    }
    const std::size_t real_cols = n + slack_count;
    const std::size_t cols = real_cols + artificial_count;

    Tableau t(m, cols);
    std::size_t next_slack = n;
    std::size_t next_artificial = real_cols;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(lp.rows[i][j]) != 0) {
                t.at(i, j) = sign[i] < 0 ? Rational{-lp.rows[i][j]} : lp.rows[i][j];
            }
        }
        t.rhs(i) = sign[i] < 0 ? Rational{-lp.rhs[i]} : lp.rhs[i];
        switch (sense[i]) {
        case Sense::LessEqual:
            t.at(i, next_slack) = 1;
            t.basis()[i] = next_slack++;
            break;
        case Sense::GreaterEqual:
            t.at(i, next_slack++) = -1;
            t.at(i, next_artificial) = 1;
            t.basis()[i] = next_artificial++;
            break;
        case Sense::Equal:
            t.at(i, next_artificial) = 1;
            t.basis()[i] = next_artificial++;
            break;
        }
    }

    LpSolution solution;
    if (artificial_count > 0) {
        RationalVector phase1(cols, Rational{0});
        for (std::size_t j = real_cols; j < cols; ++j) {
            phase1[j] = -1;
        }
        t.set_objective(phase1);
        t.optimize(cols);
        if (sgn(t.value()) < 0) {
            solution.status = LpStatus::Infeasible;
            solution.pivots = t.pivots();
            return solution;
        }
        // Drive zero-level artificials out of the basis; rows with no
        // nonzero real entry are redundant and dropped.
        for (std::size_t r = 0; r < t.rows();) {
            if (t.basis()[r] < real_cols) {
                ++r;
                continue;
            }
            std::size_t replacement = kNone;
            for (std::size_t j = 0; j < real_cols; ++j) {
                if (sgn(t.at(r, j)) != 0) {
                    replacement = j;
                    break;
                }
            }
            if (replacement == kNone) {
                t.erase_row(r);
            } else {
                t.pivot(r, replacement);
                ++r;
            }
        }
    }

    t.set_objective(lp.objective);
    if (!t.optimize(real_cols)) {
        solution.status = LpStatus::Unbounded;
        solution.pivots = t.pivots();
        return solution;
    }

    solution.status = LpStatus::Optimal;
    solution.assignment.assign(n, Rational{0});
    for (std::size_t r = 0; r < t.rows(); ++r) {
        if (t.basis()[r] < n) {
            solution.assignment[t.basis()[r]] = t.rhs(r);
        }
    }
    solution.value = 0;
    for (std::size_t j = 0; j < n; ++j) {
        solution.value += lp.objective[j] * solution.assignment[j];
    }
    solution.pivots = t.pivots();
    return solution;
}

bool satisfies(const LinearProgram& lp, const RationalVector& x) {
    check_dimensions(lp);
    if (x.size() != lp.objective.size()) {
        return false;
    }
    for (const auto& xi : x) {
        if (sgn(xi) < 0) {
            return false;
        }
    }
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            lhs += lp.rows[i][j] * x[j];
        }
        const bool ok = lp.sense[i] == Sense::LessEqual      ? lhs <= lp.rhs[i]
                        : lp.sense[i] == Sense::GreaterEqual ? lhs >= lp.rhs[i]
                                                             : lhs == lp.rhs[i];
        if (!ok) {
            return false;
        }
    }
    return true;
}

} // namespace amcc
