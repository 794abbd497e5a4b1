#include "amcc/errors.hpp"
#include "amcc/lp.hpp"

#include <doctest.h>

#include <functional>
#include <optional>
#include <random>

using namespace amcc;

namespace {

Rational r(long n, long d = 1) {
    return make_rational(n, d);
}

// Brute force for tiny LPs with <= constraints: try every square subsystem of
// the constraints plus coordinate planes, solve it by Cramer's rule and keep
// the best feasible point.
std::optional<Rational> brute_force_max(const LinearProgram& lp) {
    const std::size_t n = lp.objective.size();
    std::vector<RationalVector> planes = lp.rows;
    RationalVector rhs = lp.rhs;
    for (std::size_t j = 0; j < n; ++j) {
        RationalVector e(n, 0);
        e[j] = 1;
        planes.push_back(e);
        rhs.push_back(0);
    }
    std::optional<Rational> best;
    const std::size_t total = planes.size();
    std::vector<std::size_t> pick(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
        if (depth == n) {
            // Gaussian elimination on the n x n system
            std::vector<RationalVector> a;
            for (auto i : pick) {
                auto row = planes[i];
                row.push_back(rhs[i]);
                a.push_back(row);
            }
            for (std::size_t col = 0; col < n; ++col) {
                std::size_t p = col;
                while (p < n && a[p][col] == 0) {
                    ++p;
                }
                if (p == n) {
                    return;
                }
                std::swap(a[p], a[col]);
                for (std::size_t i = 0; i < n; ++i) {
                    if (i != col && a[i][col] != 0) {
                        const Rational f = a[i][col] / a[col][col];
                        for (std::size_t k = col; k <= n; ++k) {
                            a[i][k] -= f * a[col][k];
                        }
                    }
                }
            }
            RationalVector x(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = a[i][n] / a[i][i];
            }
            if (satisfies(lp, x)) {
                Rational v = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    v += lp.objective[j] * x[j];
                }
                if (!best || v > *best) {
                    best = v;
                }
            }
            return;
        }
        for (std::size_t i = start; i < total; ++i) {
            pick[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return best;
}

} // namespace

TEST_CASE("textbook LP") {
    // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  -> 36 at (2, 6)
    const LinearProgram lp{{3, 5},
                           {{1, 0}, {0, 2}, {3, 2}},
                           {4, 12, 18},
                           {Sense::LessEqual, Sense::LessEqual, Sense::LessEqual}};
    const auto sol = simplex_solve(lp);
    CHECK(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 36);
    CHECK(sol.assignment == RationalVector{2, 6});
    CHECK(satisfies(lp, sol.assignment));
}

TEST_CASE("equality and >= rows need phase one") {
    // max x + y s.t. x + y = 1, x >= 1/3, y <= 1/2
    const LinearProgram lp{{1, 1},
                           {{1, 1}, {1, 0}, {0, 1}},
                           {1, r(1, 3), r(1, 2)},
                           {Sense::Equal, Sense::GreaterEqual, Sense::LessEqual}};
    const auto sol = simplex_solve(lp);
    CHECK(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 1);
    CHECK(satisfies(lp, sol.assignment));
    // min x (as max -x) in the same region: x = 1/2
    auto lp2 = lp;
    lp2.objective = {-1, 0};
    const auto sol2 = simplex_solve(lp2);
    CHECK(sol2.value == r(-1, 2));
}

TEST_CASE("negative right-hand sides are normalized") {
    // -x - y <= -2 (x + y >= 2), max -x - 2y  -> x = 2, y = 0
    const LinearProgram lp{{-1, -2}, {{-1, -1}}, {-2}, {Sense::LessEqual}};
    const auto sol = simplex_solve(lp);
    CHECK(sol.status == LpStatus::Optimal);
    CHECK(sol.value == -2);
}

TEST_CASE("infeasible and unbounded") {
    const LinearProgram infeasible{{1}, {{1}, {1}}, {1, 2}, {Sense::LessEqual, Sense::GreaterEqual}};
    CHECK(simplex_solve(infeasible).status == LpStatus::Infeasible);
    const LinearProgram unbounded{{1, 1}, {{1, -1}}, {1}, {Sense::LessEqual}};
    CHECK(simplex_solve(unbounded).status == LpStatus::Unbounded);
    const LinearProgram bad{{1, 1}, {{1}}, {1}, {Sense::LessEqual}};
    CHECK_THROWS_AS(simplex_solve(bad), InvalidArgument);
}

TEST_CASE("redundant equalities and degeneracy") {
    // duplicated equality rows leave an artificial basic at zero after phase one
    const LinearProgram lp{{1, 2, 3},
                           {{1, 1, 1}, {2, 2, 2}, {1, 0, 0}, {0, 1, 0}},
                           {1, 2, 0, 0},
                           {Sense::Equal, Sense::Equal, Sense::LessEqual, Sense::LessEqual}};
    const auto sol = simplex_solve(lp);
    CHECK(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 3);
    CHECK(sol.assignment == RationalVector{0, 0, 1});
}

TEST_CASE("property: simplex matches brute-force vertex enumeration on random small LPs") {
    std::mt19937_64 rng(5);
    int optimal = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 2;
        const std::size_t m = 2 + rng() % 3;
        LinearProgram lp;
        for (std::size_t j = 0; j < n; ++j) {
            lp.objective.push_back(r(static_cast<long>(rng() % 7) - 2));
        }
        for (std::size_t i = 0; i < m; ++i) {
            RationalVector row;
            for (std::size_t j = 0; j < n; ++j) {
                row.push_back(r(static_cast<long>(rng() % 9) - 2, 1 + static_cast<long>(rng() % 3)));
            }
            lp.rows.push_back(row);
            lp.rhs.push_back(r(static_cast<long>(rng() % 10), 1 + static_cast<long>(rng() % 2)));
            lp.sense.push_back(Sense::LessEqual);
        }
        // a box keeps every instance bounded
        for (std::size_t j = 0; j < n; ++j) {
            RationalVector row(n, 0);
            row[j] = 1;
            lp.rows.push_back(row);
            lp.rhs.push_back(5);
            lp.sense.push_back(Sense::LessEqual);
        }
        const auto sol = simplex_solve(lp);
        const auto brute = brute_force_max(lp);
        REQUIRE(brute); // origin is always feasible
        CHECK(sol.status == LpStatus::Optimal);
        CHECK(sol.value == *brute);
        CHECK(satisfies(lp, sol.assignment));
        optimal += sol.status == LpStatus::Optimal;
    }
    CHECK(optimal == 150);
}
