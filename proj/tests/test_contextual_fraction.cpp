#include "amcc/contextual_fraction.hpp"
#include "amcc/corpus.hpp"
#include "amcc/errors.hpp"
#include "amcc/random_models.hpp"

#include "chsh_oracle.hpp"

#include <doctest.h>

using namespace amcc;

TEST_CASE("extremal values") {
    for (unsigned k = 0; k < 8; ++k) {
        const auto r = contextual_fraction(pr_box(k));
        CHECK(r.cf == 1);
        CHECK(r.ncf == 0);
        CHECK(!r.decomposition);
        CHECK(!is_noncontextual(pr_box(k)));
    }
    for (const auto* name : {"uniform(2,2,2)", "uniform(3,2,2)", "deterministic(2,2,2;0110)"}) {
        const auto m = corpus(name);
        CHECK(contextual_fraction(m).cf == 0);
        CHECK(is_noncontextual(m));
    }
    CHECK(contextual_fraction(ghz_322()).cf == 1);
    CHECK(contextual_fraction(parity_amcc_422()).cf == 1);
}

TEST_CASE("noisy PR boxes: cf equals the PR weight") {
    // oracle: the dual-vertex enumeration, independent of the simplex
    const auto s = bell_scenario(2, 2, 2);
    for (long num = 0; num <= 8; ++num) {
        const auto lambda = make_rational(num, 8);
        const auto m = mix(lambda, pr_box(3), uniform(s));
        const auto r = contextual_fraction(m);
        const Rational oracle_cf = 1 - chsh_oracle::noncontextual_fraction(m.tables());
        CHECK(r.cf == oracle_cf);
    }
    // lambda = 3/4 gives cf = 1/2
    CHECK(contextual_fraction(corpus("noisy_pr_box(0,3/4)")).cf == make_rational(1, 2));
    // noise below the local bound: lambda <= 1/2 is local
    CHECK(is_noncontextual(mix(make_rational(1, 2), pr_box(0), uniform(s))));
    CHECK(!is_noncontextual(mix(make_rational(9, 16), pr_box(0), uniform(s))));
}

TEST_CASE("decomposition reproduces the model") {
    const auto m = corpus("noisy_pr_box(5,3/4)");
    const auto r = contextual_fraction(m);
    REQUIRE(r.decomposition);
    const auto back = mix(r.ncf, r.decomposition->noncontextual, r.decomposition->strongly_contextual);
    CHECK(back == m);
    CHECK(contextual_fraction(r.decomposition->strongly_contextual).cf == 1);
    CHECK(is_noncontextual(r.decomposition->noncontextual));
    Rational mass = 0;
    for (const auto& b : r.nc_part) {
        CHECK(sgn(b) >= 0);
        mass += b;
    }
    CHECK(mass == r.ncf);
}

TEST_CASE("signaling models are rejected") {
    const auto s = bell_scenario(2, 2, 2);
    const RationalVector a{1, 0, 0, 0};
    const RationalVector b{0, 0, 1, 0};
    const EmpiricalModel m(s, {a, b, a, a});
    CHECK_THROWS_AS(contextual_fraction(m), PreconditionViolation);
    CHECK_THROWS_AS(is_noncontextual(m), PreconditionViolation);
}

TEST_CASE("property: convexity of cf under mixing") {
    const ModelSampler sampler(17);
    for (std::uint64_t i = 0; i < 60; ++i) {
        const auto a = sampler.small(i);
        const auto b = sampler.small(i + 4); // same scenario (period 4)
        const auto lambda = make_rational(1 + static_cast<long>(i % 7), 8);
        const auto cfa = contextual_fraction(a).cf;
        const auto cfb = contextual_fraction(b).cf;
        const auto cfm = contextual_fraction(mix(lambda, a, b)).cf;
        CHECK(cfm <= lambda * cfa + (1 - lambda) * cfb);
    }
}

TEST_CASE("property: cf = 0 iff the equality LP is feasible") {
    const ModelSampler sampler(23);
    for (std::uint64_t i = 0; i < 60; ++i) {
        const auto m = sampler.small(i);
        CHECK((contextual_fraction(m).cf == 0) == is_noncontextual(m));
    }
}

TEST_CASE("property: 0 <= cf <= 1 and the NC part is dominated") {
    const ModelSampler sampler(29);
    for (std::uint64_t i = 0; i < 40; ++i) {
        const auto m = sampler.small(i);
        const auto lp = noncontextual_fraction_lp(m);
        const auto r = contextual_fraction(m);
        CHECK(sgn(r.cf) >= 0);
        CHECK(r.cf <= 1);
        CHECK(satisfies(lp, r.nc_part));
    }
}
