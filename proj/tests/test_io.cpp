#include "amcc/corpus.hpp"
#include "amcc/errors.hpp"
#include "amcc/io.hpp"

#include <doctest.h>

using namespace amcc;

TEST_CASE("property: corpus models round-trip through JSON exactly") {
    for (const auto& name : corpus_names()) {
        const auto m = corpus(name);
        const auto text = io::to_json(m).dump();
        CHECK(io::model_from_json(io::parse_text(text)) == m);
    }
}

TEST_CASE("rationals are strings") {
    const auto j = io::to_json(pr_box(0));
    CHECK(j["tables"][0][0] == "1/2");
    CHECK(j["tables"][0][1] == "0/1");
    CHECK(j["scenario"]["parties"] == 2);
}

TEST_CASE("explicit scenario form") {
    const auto j = io::parse_text(R"({
        "scenario": {"measurements": ["A", "B", "C"], "cover": [["A", "B"], [1, 2], ["A", "C"]], "outcomes": 2},
        "tables": [["0", "1/2", "1/2", "0"], ["0", "1/2", "1/2", "0"], ["0", "1/2", "1/2", "0"]]})");
    const auto m = io::model_from_json(j);
    CHECK(m.scenario().context_count() == 3);
    CHECK(io::model_from_json(io::to_json(m)) == m);
}

TEST_CASE("reader errors") {
    CHECK_THROWS_AS(io::parse_text("{"), ParseError);
    CHECK_THROWS_AS(io::model_from_json(io::parse_text(R"({"scenario": {"parties": 2}})")), ParseError);
    auto j = io::to_json(pr_box(0));
    j["tables"][0][0] = 0.5;
    CHECK_THROWS_AS(io::model_from_json(j), ParseError);
    j = io::to_json(pr_box(0));
    j["tables"][0][0] = "1/3";
    CHECK_THROWS_AS(io::model_from_json(j), ParseError); // does not sum to 1
    j = io::to_json(pr_box(0));
    j["tables"].erase(3);
    CHECK_THROWS_AS(io::model_from_json(j), ParseError);
    CHECK_THROWS_AS(io::read_file("/nonexistent/model.json"), ParseError);
}

TEST_CASE("support and family round trips") {
    const auto support = support_of(pr_box(2));
    CHECK(io::support_from_json(io::to_json(support)) == support);
    auto bad = io::to_json(support);
    bad["tables"][0][0] = 2;
    CHECK_THROWS_AS(io::support_from_json(bad), ParseError);

    const auto rec = reconstruct_tables();
    const auto j = io::to_json(rec.family);
    CHECK(j["dimension"] == 1);
    CHECK(j["bounds"]["lower"] == "1/8");
    CHECK(j["bounds"]["upper"] == "1/4");
    const auto back = io::family_from_json(j);
    CHECK(back.base == rec.family.base);
    CHECK(back.directions == rec.family.directions);
    CHECK(back.parameter_slots == rec.family.parameter_slots);
    CHECK(back.model_at({make_rational(1, 8)}) == rec.family.model_at({make_rational(1, 8)}));
}

TEST_CASE("plan JSON round trip") {
    const auto plan = paper_plan();
    CHECK(parse_plan(io::to_json(plan).dump()) == plan);
}

TEST_CASE("model CSV") {
    const auto csv = io::model_csv(pr_box(0));
    CHECK(csv.rfind("context,\"(0,0)\",\"(0,1)\",\"(1,0)\",\"(1,1)\"\n\"(0,0)\",1/2,0,0,1/2\n", 0) == 0);
}
