#include "amcc/corpus.hpp"
#include "amcc/csp_builder.hpp"
#include "amcc/errors.hpp"

#include "naive.hpp"

#include <doctest.h>

using namespace amcc;

namespace {

SectionIndex bits(const char* s) {
    SectionIndex v = 0;
    for (; *s; ++s) {
        v = v * 2 + static_cast<SectionIndex>(*s - '0');
    }
    return v;
}

} // namespace

TEST_CASE("bundled plan") {
    const auto plan = paper_plan();
    CHECK(plan.base.packed() == parity_amcc_422_system().packed());
    CHECK(addition_counts(plan) ==
          std::vector<std::size_t>{3, 1, 0, 2, 0, 4, 3, 0, 0, 1, 3, 0, 5, 3, 0, 0});
    // B1 (context (0,0,0,0)) gains 1000, 1011, 1110
    CHECK(plan.additions[0] == std::vector<SectionIndex>{bits("1000"), bits("1011"), bits("1110")});
    // B13 (context (1,1,0,0)): corrected list has 1010 instead of 1001
    CHECK(plan.additions[12] ==
          std::vector<SectionIndex>{bits("0000"), bits("0101"), bits("0110"), bits("1010"), bits("1100")});
    const auto printed = paper_plan_as_printed();
    CHECK(printed.additions[12] ==
          std::vector<SectionIndex>{bits("0000"), bits("0101"), bits("0110"), bits("1001"), bits("1100")});
    for (ContextIndex c = 0; c < 16; ++c) {
        if (c != 12) {
            CHECK(printed.additions[c] == plan.additions[c]);
        }
    }
}

TEST_CASE("augmented support passes both filters, checked from the definitions") {
    for (const auto& plan : {paper_plan(), paper_plan_as_printed()}) {
        const auto support = apply_plan(plan);
        CHECK(naive::compatible_count(support) == 0);
        CHECK(naive::possibilistic_ns(support));
        CHECK(strong_contextuality(support));
        CHECK(possibilistic_no_signaling(support));
        std::size_t total = 0;
        for (const auto& set : support.supports()) {
            total += set.count();
        }
        CHECK(total == 16 * 8 + 25);
    }
}

TEST_CASE("apply_plan rejects same-parity additions") {
    auto plan = paper_plan();
    plan.additions[1].push_back(bits("0000")); // even parity already allowed in context 1
    CHECK_THROWS_AS(apply_plan(plan), InvalidArgument);
    plan = paper_plan();
    plan.additions[1].push_back(16);
    CHECK_THROWS_AS(apply_plan(plan), InvalidArgument);
}

TEST_CASE("plan parsing errors") {
    CHECK_THROWS_AS(parse_plan("{"), ParseError);
    CHECK_THROWS_AS(parse_plan(R"({"scenario": {"parties": 4, "settings": 2, "outcomes": 2}})"), ParseError);
    CHECK_THROWS_AS(parse_plan(R"({"scenario": {"parties": 2, "settings": 2, "outcomes": 2},
        "odd_parity_contexts": [[0, 2]], "additions": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_plan(R"({"scenario": {"parties": 2, "settings": 2, "outcomes": 2},
        "odd_parity_contexts": [], "additions": [{"settings": [0, 0], "added": ["012"]}]})"),
                    ParseError);
}

TEST_CASE("table reconstruction matches the transcription") {
    const auto rec = reconstruct_tables();
    CHECK(rec.ok());
    CHECK_NOTHROW(rec.verify());
    CHECK(render_table_csv(rec.family.scenario, rec.table) == bundled_tables_csv());
    // stable across runs
    CHECK(render_table_csv(rec.family.scenario, reconstruct_tables().table) == bundled_tables_csv());
}

TEST_CASE("a corrupted transcription cell is reported") {
    auto expected = parse_table_csv(bundled_tables_csv());
    expected[12][0] = parse_affine("q");
    const auto rec = reconstruct_tables(paper_plan(), expected);
    CHECK(!rec.ok());
    REQUIRE(rec.diffs.size() == 1);
    CHECK(rec.diffs[0].context == 12);
    CHECK(rec.diffs[0].section == 0);
    CHECK(rec.diffs[0].actual == parse_affine("2q-1/4"));
    CHECK_THROWS_AS(rec.verify(), VerificationFailure);
}

TEST_CASE("the printed plan fails reconstruction") {
    CHECK_THROWS_AS(reconstruct_tables(paper_plan_as_printed(), parse_table_csv(bundled_tables_csv())),
                    VerificationFailure);
}

TEST_CASE("affine cell parsing") {
    CHECK(parse_affine("q") == AffineEntry{0, 1});
    CHECK(parse_affine("0") == AffineEntry{0, 0});
    CHECK(parse_affine("1/4-q") == AffineEntry{make_rational(1, 4), -1});
    CHECK(parse_affine("2q-1/4") == AffineEntry{make_rational(-1, 4), 2});
    CHECK(parse_affine(" -q + 1/2 ") == AffineEntry{make_rational(1, 2), -1});
    CHECK_THROWS_AS(parse_affine(""), ParseError);
    CHECK_THROWS_AS(parse_affine("x"), ParseError);
    CHECK_THROWS_AS(parse_affine("1/4--q"), ParseError);
}

TEST_CASE("csv parsing") {
    const auto t = parse_table_csv("context,\"(0)\",\"(1)\"\n\"(0)\",q,1-q\n\"(1)\",1/2,1/2\n");
    REQUIRE(t.size() == 2);
    CHECK(t[0][1] == AffineEntry{1, -1});
    CHECK_THROWS_AS(parse_table_csv("context,a,b\n\"(0)\",q\n"), ParseError);
    CHECK_THROWS_AS(parse_table_csv("context,\"a\n"), ParseError);
    CHECK_THROWS_AS(parse_table_csv("header only\n"), ParseError);
}

TEST_CASE("search: deterministic in seed, independent of threads") {
    const auto base = paper_plan().base;
    const auto counts = addition_counts(paper_plan());
    const auto a = search_plans(base, counts, {40, 9, 1});
    const auto b = search_plans(base, counts, {40, 9, 3});
    const auto c = search_plans(base, counts, {40, 9, 1});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].trial == b[i].trial);
        CHECK(a[i].plan == b[i].plan);
        CHECK(a[i].plan == c[i].plan);
    }
    const auto d = search_plans(base, counts, {40, 10, 1});
    bool differs = a.size() != d.size();
    for (std::size_t i = 0; !differs && i < a.size(); ++i) {
        differs = !(a[i].plan == d[i].plan);
    }
    CHECK(differs);
}

TEST_CASE("search hits are nonempty, distinct from the bundled plan, and pass both filters") {
    const auto reference = paper_plan();
    const auto hits = search_plans(reference.base, addition_counts(reference), {50, 1, 2});
    REQUIRE(!hits.empty());
    bool distinct = false;
    for (const auto& h : hits) {
        CHECK(addition_counts(h.plan) == addition_counts(reference));
        const auto support = apply_plan(h.plan);
        CHECK(naive::compatible_count(support) == 0);
        CHECK(naive::possibilistic_ns(support));
        distinct = distinct || !(h.plan == reference);
    }
    CHECK(distinct);
}

TEST_CASE("search with zero counts returns the base support every time") {
    const auto base = parity_amcc_422_system();
    const auto hits = search_plans(base, std::vector<std::size_t>(16, 0), {5, 0, 1});
    REQUIRE(hits.size() == 5);
    for (const auto& h : hits) {
        CHECK(apply_plan(h.plan) == support_of(build_symmetric_model(base)));
    }
    // a satisfiable base is never strongly contextual
    const auto sat = ParitySystem::from_packed(bell_scenario(4, 2, 2), 0);
    CHECK(search_plans(sat, std::vector<std::size_t>(16, 0), {5, 0, 1}).empty());
}

TEST_CASE("search argument checks") {
    const auto base = parity_amcc_422_system();
    CHECK_THROWS_AS(search_plans(base, {1, 2}, {}), InvalidArgument);
    CHECK_THROWS_AS(search_plans(base, std::vector<std::size_t>(16, 9), {}), InvalidArgument);
}
