#include "amcc/contextual_fraction.hpp"
#include "amcc/corpus.hpp"
#include "amcc/errors.hpp"
#include "amcc/possibilistic.hpp"
#include "amcc/random_models.hpp"

#include "naive.hpp"

#include <doctest.h>

#include <random>

using namespace amcc;

TEST_CASE("pr box support has no compatible global section") {
    const auto support = support_of(pr_box(0));
    CHECK(compatible_globals(support).empty());
    CHECK(strong_contextuality(support));
    CHECK(naive::compatible_count(support) == 0);
}

TEST_CASE("deterministic support has exactly its own global") {
    const auto s = bell_scenario(2, 2, 2);
    const auto support = support_of(deterministic(s, GlobalSection{{1, 0, 0, 1}}));
    CHECK(compatible_globals(support) == std::vector<SectionIndex>{0b1001});
    CHECK(!strong_contextuality(full_support(s)));
    CHECK(compatible_globals(full_support(s)).size() == 16);
}

TEST_CASE("support model validation") {
    const auto s = bell_scenario(2, 2, 2);
    std::vector<SectionSet> sets(4, SectionSet(4));
    sets[0].set(0);
    sets[1].set(0);
    sets[2].set(0);
    CHECK_THROWS_AS(SupportModel(s, sets), InvalidArgument); // empty context 3
    sets[3] = SectionSet(3);
    CHECK_THROWS_AS(SupportModel(s, sets), InvalidArgument);
}

TEST_CASE("boolean rendering") {
    const auto s = bell_scenario(4, 2, 2);
    // context (1,1,0,0) = {Y1', Y2', Y3, Y4}, section 0101
    CHECK(render_statement(s, 12, 0b0101) == "(¬Y1' ∧ Y2' ∧ ¬Y3 ∧ Y4)");
    const auto formula = formula_of(support_of(pr_box(0)));
    REQUIRE(formula.propositions.size() == 4);
    CHECK(formula.propositions[0].statements == std::vector<SectionIndex>{0, 3});
    CHECK(render_proposition(bell_scenario(2, 2, 2), formula.propositions[0]) ==
          "(¬Y1 ∧ ¬Y2) ∨ (Y1 ∧ Y2)");
    // a global section satisfies the formula iff it is compatible
    for (SectionIndex g = 0; g < 16; ++g) {
        CHECK(!evaluate(bell_scenario(2, 2, 2), formula, global_at(bell_scenario(2, 2, 2), g)));
    }
}

TEST_CASE("possibilistic signaling") {
    const auto s = bell_scenario(2, 2, 2);
    std::vector<SectionSet> sets(4, SectionSet(4));
    for (auto& set : sets) {
        set.set();
    }
    CHECK(possibilistic_no_signaling(SupportModel(s, sets)));
    // context 0 only allows Y1 = 0 but context 1 allows Y1 = 1
    sets[0].reset();
    sets[0].set(0);
    const SupportModel bad(s, sets);
    CHECK(!possibilistic_no_signaling(bad));
    const auto w = possibilistic_signaling_witness(bad);
    REQUIRE(w);
    CHECK(w->first == 0);
    CHECK(!naive::possibilistic_ns(bad));
}

TEST_CASE("property: fast checks agree with definitions on random supports") {
    std::mt19937_64 rng(41);
    const MeasurementScenario scenarios[] = {bell_scenario(2, 2, 2), bell_scenario(3, 2, 2), bell_scenario(2, 3, 2),
                                             MeasurementScenario({"A", "B", "C", "D"},
                                                                 {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {2, 2, 2, 2})};
    for (int trial = 0; trial < 200; ++trial) {
        const auto& s = scenarios[trial % 4];
        std::vector<SectionSet> sets;
        for (ContextIndex c = 0; c < s.context_count(); ++c) {
            SectionSet set(s.section_count(c));
            while (set.none()) {
                for (std::size_t i = 0; i < set.size(); ++i) {
                    set[i] = rng() % 3 != 0;
                }
            }
            sets.push_back(set);
        }
        const SupportModel support(s, sets);
        CHECK(compatible_globals(support).size() == naive::compatible_count(support));
        CHECK(possibilistic_no_signaling(support) == naive::possibilistic_ns(support));
        const SupportChecker checker(s);
        CHECK(checker.strongly_contextual(sets) == (naive::compatible_count(support) == 0));
    }
}

TEST_CASE("property: strong contextuality iff cf = 1") {
    const ModelSampler sampler(101);
    int maximal = 0;
    for (std::uint64_t i = 0; i < 120; ++i) {
        const auto m = sampler.small(i);
        const bool sc = strong_contextuality(support_of(m));
        const bool cf_one = contextual_fraction(m).cf == 1;
        CHECK(sc == cf_one);
        maximal += cf_one;
    }
    // the generator has to exercise both sides
    CHECK(maximal > 5);
    CHECK(maximal < 110);
}
