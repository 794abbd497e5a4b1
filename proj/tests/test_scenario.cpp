#include "amcc/errors.hpp"
#include "amcc/rational.hpp"
#include "amcc/scenario.hpp"

#include "naive.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace amcc;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational(" -2/6 ") == make_rational(-1, 3));
    CHECK(parse_rational("5") == 5);
    CHECK(to_fraction_string(make_rational(1)) == "1/1");
    CHECK(to_fraction_string(make_rational(0)) == "0/1");
    CHECK(to_fraction_string(make_rational(2, -4)) == "-1/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("bell scenario layout") {
    const auto s = bell_scenario(2, 2, 2);
    CHECK(s.measurement_count() == 4);
    CHECK(s.context_count() == 4);
    CHECK(s.labels() == std::vector<std::string>{"Y1", "Y1'", "Y2", "Y2'"});
    // context index = setting tuple read in base m
    CHECK(s.context(0) == Context{0, 2});
    CHECK(s.context(1) == Context{0, 3});
    CHECK(s.context(2) == Context{1, 2});
    CHECK(s.context(3) == Context{1, 3});
    CHECK(setting_tuple(s, 2) == std::vector<std::size_t>{1, 0});
    CHECK(s.slot_count() == 16);
    CHECK(s.global_count() == 16);

    const auto big = bell_scenario(4, 2, 2);
    CHECK(big.context_count() == 16);
    CHECK(big.slot_count() == 256);
    CHECK(big.global_count() == 256);
    CHECK(setting_tuple(big, 12) == std::vector<std::size_t>{1, 1, 0, 0});
    CHECK(big.labels()[5] == "Y3'");

    const auto three = bell_scenario(2, 3, 3);
    CHECK(three.labels()[2] == "Y1''");
    CHECK(three.section_count(0) == 9);
}

TEST_CASE("section packing is big-endian") {
    const auto s = bell_scenario(3, 2, 2);
    const Section sec{5, {1, 0, 1}};
    CHECK(section_index(s, sec) == 5);
    CHECK(section_at(s, 5, 6).assignment == std::vector<Outcome>{1, 1, 0});
    const GlobalSection g{{1, 0, 0, 1, 1, 0}};
    CHECK(global_index(s, g) == 0b100110);
    CHECK(global_at(s, 0b100110) == g);
    // context 5 = settings (1,0,1) = measurements {1, 2, 5}
    CHECK(restrict(s, g, 5).assignment == std::vector<Outcome>{0, 0, 0});
    CHECK_THROWS_AS(section_index(s, Section{0, {2, 0, 0}}), InvalidArgument);
}

TEST_CASE("explicit scenario validation") {
    // 4-cycle
    const MeasurementScenario cycle({"A", "B", "C", "D"}, {{1, 2}, {0, 1}, {2, 3}, {0, 3}}, {2, 2, 2, 2});
    CHECK(cycle.context(0) == Context{0, 1});
    CHECK(cycle.find_context({0, 3}) == 1); // cover sorted lexicographically
    CHECK(!cycle.bell_shape());

    CHECK_THROWS_AS(MeasurementScenario({"A", "B"}, {{0}}, {2, 2}), InvalidArgument);             // uncovered
    CHECK_THROWS_AS(MeasurementScenario({"A", "B"}, {{0, 1}, {0}}, {2, 2}), InvalidArgument);     // not antichain
    CHECK_THROWS_AS(MeasurementScenario({"A", "B"}, {{0, 1}}, {2, 0}), InvalidArgument);          // zero arity
    CHECK_THROWS_AS(MeasurementScenario({"A", "B"}, {{0, 2}}, {2, 2}), InvalidArgument);          // bad index
    CHECK_THROWS_AS(MeasurementScenario({}, {}, {}), InvalidArgument);
    CHECK_THROWS_AS(bell_scenario(0, 2, 2), InvalidArgument);
}

TEST_CASE("global enumeration limit") {
    CHECK_THROWS_AS(bell_scenario(13, 2, 2).global_count(), ResourceLimit);
}

TEST_CASE("property: random Bell scenarios have valid covers and consistent restriction") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 3, o = 2 + rng() % 2;
        const auto s = bell_scenario(n, m, o);
        std::set<MeasurementIndex> covered;
        for (const auto& c : s.cover()) {
            CHECK(c.size() == n);
            covered.insert(c.begin(), c.end());
        }
        CHECK(covered.size() == n * m);
        for (ContextIndex a = 0; a < s.context_count(); ++a) {
            for (ContextIndex b = 0; b < s.context_count(); ++b) {
                if (a != b) {
                    CHECK(intersect(s.context(a), s.context(b)).size() < s.context(a).size());
                }
            }
        }
        std::size_t expected_contexts = 1;
        for (std::size_t p = 0; p < n; ++p) {
            expected_contexts *= m;
        }
        CHECK(s.context_count() == expected_contexts);
        // restriction agrees with a direct reading of the assignment
        if (s.global_count() <= 4096) {
            const RestrictionMap table(s);
            const auto globals = naive::all_assignments(s);
            for (std::size_t gi = 0; gi < globals.size(); gi += 7) {
                CHECK(global_index(s, GlobalSection{globals[gi]}) == gi);
                for (ContextIndex c = 0; c < s.context_count(); ++c) {
                    CHECK(table.section_of(gi, c) == naive::local_index(s, s.context(c), globals[gi]));
                }
            }
        }
    }
}

TEST_CASE("incidence matrix has one 1 per column per context") {
    const auto s = bell_scenario(2, 2, 2);
    const auto m = incidence_matrix(s);
    CHECK(m.rows() == 16);
    CHECK(m.cols() == 16);
    for (std::size_t g = 0; g < m.cols(); ++g) {
        for (ContextIndex c = 0; c < 4; ++c) {
            int ones = 0;
            for (std::size_t r = s.row_offset(c); r < s.row_offset(c) + 4; ++r) {
                ones += m.at(r, g);
            }
            CHECK(ones == 1);
        }
    }
    // global (a0,a1,b0,b1) = (1,0,1,1) hits context (0,0) at section (1,1)
    CHECK(m.at(s.row_offset(0) + 3, 0b1011) == 1);
}
