#include "amcc/corpus.hpp"
#include "amcc/csp_builder.hpp"
#include "amcc/errors.hpp"
#include "amcc/linear_algebra.hpp"
#include "amcc/support_solver.hpp"

#include "naive.hpp"

#include <doctest.h>

#include <random>

using namespace amcc;

namespace {

std::size_t closed_form_dimension(std::size_t n, std::size_t m, std::size_t o) {
    std::size_t d = 1;
    for (std::size_t p = 0; p < n; ++p) {
        d *= m * (o - 1) + 1;
    }
    return d - 1;
}

} // namespace

TEST_CASE("row reduction") {
    // x + y = 3, x - y = 1 -> x = 2, y = 1
    const auto e = row_reduce({{1, 1, 3}, {1, -1, 1}}, 2);
    CHECK(e.consistent);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.rows[0][2] == 2);
    CHECK(e.rows[1][2] == 1);
    CHECK(!row_reduce({{1, 1, 3}, {2, 2, 5}}, 2).consistent);
    CHECK(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
}

TEST_CASE("no-signaling dimensions") {
    CHECK(ns_dimension(bell_scenario(4, 2, 2)) == 80);
    CHECK(ns_dimension(bell_scenario(2, 2, 2)) == 8);
    CHECK(ns_dimension(bell_scenario(1, 1, 2)) == 1);
}

TEST_CASE("property: dimension matches the product formula") {
    for (auto [n, m, o] : {std::tuple{1, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {1, 3, 3}, {2, 3, 3}}) {
        CHECK(ns_dimension(bell_scenario(n, m, o)) == closed_form_dimension(n, m, o));
    }
}

TEST_CASE("full support gives the whole no-signaling space") {
    const auto s = bell_scenario(2, 2, 2);
    const auto family = solve_support(full_support(s));
    REQUIRE(family);
    CHECK(family->dimension() == 8);
    // the uniform model lies in it
    CHECK(family->locate(uniform(s).stacked()));
}

TEST_CASE("pr box support pins the pr box") {
    const auto family = solve_support(support_of(pr_box(6)));
    REQUIRE(family);
    CHECK(family->dimension() == 0);
    CHECK(family->base_nonnegative == true);
    CHECK(family->model_at({}) == pr_box(6));
}

TEST_CASE("inconsistent support") {
    const auto s = bell_scenario(2, 2, 2);
    std::vector<SectionSet> sets(4, SectionSet(4));
    for (auto& set : sets) {
        set.set();
    }
    // Y1 = 0 forced in context 0, Y1 = 1 forced in context 1
    sets[0].reset();
    sets[0].set(0);
    sets[1].reset();
    sets[1].set(2);
    CHECK(!solve_support(SupportModel(s, sets)));
}

TEST_CASE("property: family points are no-signaling and respect zeros") {
    std::mt19937_64 rng(3);
    const auto s = bell_scenario(2, 2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<SectionSet> sets;
        for (int c = 0; c < 4; ++c) {
            SectionSet set(4);
            while (set.count() < 2) {
                set.set(rng() % 4);
            }
            sets.push_back(set);
        }
        const SupportModel support(s, sets);
        const auto family = solve_support(support);
        if (!family) {
            continue;
        }
        RationalVector t;
        for (std::size_t i = 0; i < family->dimension(); ++i) {
            t.push_back(make_rational(static_cast<long>(rng() % 5) - 2, 7));
        }
        const auto x = family->point(t);
        for (ContextIndex c = 0; c < 4; ++c) {
            Rational sum = 0;
            for (SectionIndex sec = 0; sec < 4; ++sec) {
                const auto& v = x[s.row_offset(c) + sec];
                sum += v;
                if (!support.allows(c, sec)) {
                    CHECK(v == 0);
                }
            }
            CHECK(sum == 1);
        }
        // parameters can be read back off the point
        const auto back = family->locate(x);
        REQUIRE(back);
        CHECK(*back == t);
    }
}

TEST_CASE("render_affine") {
    const auto r = [](long n, long d = 1) { return make_rational(n, d); };
    CHECK(render_affine(0, 1) == "q");
    CHECK(render_affine(0, 0) == "0");
    CHECK(render_affine(r(1, 4), -1) == "1/4-q");
    CHECK(render_affine(r(-1, 4), 2) == "2q-1/4");
    CHECK(render_affine(0, -1) == "-q");
    CHECK(render_affine(r(1, 4), 3) == "1/4+3q");
    CHECK(render_affine(r(1, 2), 0) == "1/2");
    CHECK(render_affine(r(-1, 2), r(-1, 3)) == "-1/2-1/3q");
}

TEST_CASE("printed plan collapses to a single model") {
    // With B13 exactly as listed the zero pattern leaves no free parameter,
    // and the unique model is the tabulated family at q = 1/8.
    const auto family = solve_support(apply_plan(paper_plan_as_printed()));
    REQUIRE(family);
    CHECK(family->dimension() == 0);
    const auto rec = reconstruct_tables();
    CHECK(family->base == rec.family.point({make_rational(1, 8)}));
}

TEST_CASE("classification along the family") {
    const auto rec = reconstruct_tables();
    REQUIRE(rec.family.bounds);
    CHECK(*rec.family.bounds->lower == make_rational(1, 8));
    CHECK(*rec.family.bounds->upper == make_rational(1, 4));
    CHECK(classify(rec.family.model_at({make_rational(1, 8)})).amcc == AmccClass::Amcc);
    for (long num : {5, 6, 7, 8}) {
        const auto c = classify(rec.family.model_at({make_rational(num, 32)}));
        CHECK(c.cf.cf == 1);
        CHECK(c.amcc == AmccClass::NonAmcc);
        CHECK(!c.maximal_marginals);
    }
    CHECK_THROWS_AS(rec.family.model_at({make_rational(1, 16)}), InvalidArgument);
    CHECK_THROWS_AS(rec.family.model_at({make_rational(5, 16)}), InvalidArgument);
    // the parameter is the weight of section 0000 in context (0,0,0,0)
    CHECK(rec.family.parameter_slots == std::vector<std::size_t>{0});
}

TEST_CASE("classification of corpus members") {
    CHECK(classify(pr_box(0)).amcc == AmccClass::Amcc);
    CHECK(classify(ghz_322()).amcc == AmccClass::Amcc);
    CHECK(classify(uniform(bell_scenario(2, 2, 2))).contextuality == Contextuality::Noncontextual);
    const auto noisy = classify(corpus("noisy_pr_box(0,3/4)"));
    CHECK(noisy.contextuality == Contextuality::Contextual);
    CHECK(noisy.amcc == AmccClass::NotMaximal);
    CHECK(noisy.maximal_marginals);
}
