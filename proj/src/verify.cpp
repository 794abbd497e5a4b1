#include "amcc/verify.hpp"

#include "amcc/contextual_fraction.hpp"
#include "amcc/corpus.hpp"
#include "amcc/csp_builder.hpp"
#include "amcc/errors.hpp"
#include "amcc/io.hpp"
#include "amcc/parity.hpp"
#include "amcc/possibilistic.hpp"
#include "amcc/random_models.hpp"
#include "amcc/support_solver.hpp"

#include "chsh_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

namespace amcc {

namespace {

struct CheckOutcome {
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<CheckOutcome(const VerifyOptions&)> run;
};

std::string yes_no(bool b) {
    return b ? "true" : "false";
}

CheckOutcome pr_boxes(const VerifyOptions&) {
    std::ostringstream actual;
    bool pass = true;
    for (unsigned k = 0; k < 8; ++k) {
        const auto m = pr_box(k);
        const auto cf = contextual_fraction(m).cf;
        const bool marginals = is_maximal_marginals(m).holds;
        pass = pass && cf == 1 && marginals;
        actual << (k ? "; " : "") << "k=" << k << " cf=" << to_fraction_string(cf) << " mm=" << yes_no(marginals);
    }
    return {"cf=1/1 and maximal marginals for k=0..7", actual.str(), pass};
}

CheckOutcome ghz(const VerifyOptions&) {
    const auto m = ghz_322();
    const auto cf = contextual_fraction(m).cf;
    const bool marginals = is_maximal_marginals(m).holds;
    return {"cf=1/1 mm=true", "cf=" + to_fraction_string(cf) + " mm=" + yes_no(marginals), cf == 1 && marginals};
}

CheckOutcome parity_422(const VerifyOptions&) {
    const auto scenario = bell_scenario(4, 2, 2);
    const auto report = parity_scan(scenario, {1, 8});

    // GF(2) decider alone, which has its own 5 s budget.
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t gf2_unsat = 0;
    for (std::uint64_t v = 0; v < report.total; ++v) {
        gf2_unsat += parity_satisfiable_gf2(ParitySystem::from_packed(scenario, v)).satisfiable ? 0 : 1;
    }
    const double gf2_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ostringstream actual;
    actual << "unsat=" << report.unsatisfiable << " sat=" << report.satisfiable << " rank=" << report.rank
           << " exhaustive_unsat=" << report.exhaustive_unsatisfiable << " gf2_unsat=" << report.gf2_unsatisfiable
           << " agree=" << yes_no(report.deciders_agree) << " gf2_only=" << gf2_unsat << " in "
           << std::setprecision(3) << gf2_seconds << "s";
    const bool pass = report.unsatisfiable == 65504 && report.satisfiable == 32 &&
                      report.satisfiable == (std::uint64_t{1} << report.rank) &&
                      report.exhaustive_unsatisfiable == 65504 && report.gf2_unsatisfiable == 65504 &&
                      report.deciders_agree && gf2_unsat == 65504 && gf2_seconds < 5.0;
    return {"unsat=65504 sat=32=2^5, deciders agree, gf2-only < 5s", actual.str(), pass};
}

CheckOutcome parity_vector(const VerifyOptions&) {
    const auto system = parity_amcc_422_system();
    const bool exhaustive = parity_satisfiable_exhaustive(system).satisfiable;
    const bool gf2 = parity_satisfiable_gf2(system).satisfiable;
    const auto model = build_symmetric_model(system);
    const auto cf = contextual_fraction(model).cf;
    const bool marginals = is_maximal_marginals(model).holds;
    std::set<Rational> nonzero;
    for (const auto& t : model.tables()) {
        for (const auto& w : t) {
            if (sgn(w) != 0) {
                nonzero.insert(w);
            }
        }
    }
    std::string values;
    for (const auto& w : nonzero) {
        values += (values.empty() ? "" : ",") + to_fraction_string(w);
    }
    std::ostringstream actual;
    actual << "parity=" << to_hex(system.packed(), 16) << " satisfiable=" << yes_no(exhaustive || gf2)
           << " cf=" << to_fraction_string(cf) << " mm=" << yes_no(marginals) << " nonzero={" << values << "}";
    const bool pass = !exhaustive && !gf2 && cf == 1 && marginals && nonzero.size() == 1 &&
                      *nonzero.begin() == make_rational(1, 8);
    return {"parity=0x0038 unsatisfiable, cf=1/1 mm=true nonzero={1/8}", actual.str(), pass};
}

CheckOutcome dimensions(const VerifyOptions&) {
    const auto d422 = ns_dimension(bell_scenario(4, 2, 2));
    const auto d222 = ns_dimension(bell_scenario(2, 2, 2));
    return {"(4,2,2)=80 (2,2,2)=8",
            "(4,2,2)=" + std::to_string(d422) + " (2,2,2)=" + std::to_string(d222), d422 == 80 && d222 == 8};
}

CheckOutcome tables(const VerifyOptions& options) {
    const auto plan = options.plan_path ? parse_plan(io::read_text_file(*options.plan_path)) : paper_plan();
    const auto expected = parse_table_csv(options.tables_path ? io::read_text_file(*options.tables_path)
                                                              : bundled_tables_csv());
    const auto rec = reconstruct_tables(plan, expected);
    const auto& b = rec.family.bounds;
    const bool bounds_ok = b && !b->empty && b->lower && b->upper && *b->lower == make_rational(1, 8) &&
                           *b->upper == make_rational(1, 4);
    const auto at_3_16 = classify(rec.family.model_at({make_rational(3, 16)}));
    const auto at_1_8 = classify(rec.family.model_at({make_rational(1, 8)}));

    std::ostringstream actual;
    actual << "dim=" << rec.family.dimension() << " diffs=" << rec.diffs.size();
    if (!rec.diffs.empty()) {
        const auto& d = rec.diffs.front();
        actual << " (first: context " << d.context << " section " << d.section << " expected "
               << render_affine(d.expected.constant, d.expected.coefficient) << " got "
               << render_affine(d.actual.constant, d.actual.coefficient) << ")";
    }
    actual << " interval=";
    if (b && b->lower && b->upper) {
        actual << "[" << to_fraction_string(*b->lower) << "," << to_fraction_string(*b->upper) << "]";
    } else {
        actual << "unbounded/empty";
    }
    actual << " q=3/16:" << to_string(at_3_16.amcc) << "(cf=" << to_fraction_string(at_3_16.cf.cf)
           << ",mm=" << yes_no(at_3_16.maximal_marginals) << ")"
           << " q=1/8:" << to_string(at_1_8.amcc) << "(cf=" << to_fraction_string(at_1_8.cf.cf) << ")";
    const bool pass = rec.ok() && bounds_ok && at_3_16.amcc == AmccClass::NonAmcc && at_3_16.cf.cf == 1 &&
                      !at_3_16.maximal_marginals && at_1_8.amcc == AmccClass::Amcc;
    return {"dim=1 diffs=0 interval=[1/8,1/4] q=3/16:non-AMCC(cf=1/1,mm=false) q=1/8:AMCC(cf=1/1)",
            actual.str(), pass};
}

CheckOutcome equivalence(const VerifyOptions& options) {
    std::size_t checked = 0;
    std::size_t maximal = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;
    auto check = [&](const EmpiricalModel& m, const std::string& label) {
        const bool cf_one = contextual_fraction(m).cf == 1;
        const bool sc = strong_contextuality(support_of(m));
        ++checked;
        maximal += cf_one ? 1 : 0;
        if (cf_one != sc) {
            if (mismatches++ == 0) {
                first_mismatch = label;
            }
        }
    };
    for (const auto& name : corpus_names()) {
        check(corpus(name), name);
    }
    const ModelSampler sampler(options.seed);
    for (std::size_t i = 0; i < options.random_models; ++i) {
        check(sampler.small(i), "random #" + std::to_string(i));
    }
    std::ostringstream actual;
    actual << "models=" << checked << " (random=" << options.random_models << ") cf=1:" << maximal
           << " mismatches=" << mismatches;
    if (mismatches) {
        actual << " first=" << first_mismatch;
    }
    return {"mismatches=0 over corpus + >=100 random models", actual.str(),
            mismatches == 0 && options.random_models >= 100};
}

CheckOutcome oracle(const VerifyOptions& options) {
    const auto target = bell_scenario(2, 2, 2);
    std::vector<EmpiricalModel> models;
    for (const auto& name : corpus_names()) {
        auto m = corpus(name);
        if (m.scenario() == target) {
            models.push_back(std::move(m));
        }
    }
    const std::size_t corpus_count = models.size();
    const ModelSampler sampler(options.seed ^ 0x5eedULL);
    for (std::size_t i = 0; i < options.random_222_models; ++i) {
        models.push_back(sampler.bipartite_binary(i));
    }
    std::size_t mismatches = 0;
    std::string first;
    std::set<Rational> distinct;
    for (std::size_t i = 0; i < models.size(); ++i) {
        const auto simplex = contextual_fraction(models[i]).ncf;
        const auto brute = chsh_oracle::noncontextual_fraction(models[i].tables());
        distinct.insert(simplex);
        if (simplex != brute && mismatches++ == 0) {
            first = "model " + std::to_string(i) + ": simplex " + to_fraction_string(simplex) + " vs oracle " +
                    to_fraction_string(brute);
        }
    }
    std::ostringstream actual;
    actual << "models=" << models.size() << " (corpus=" << corpus_count << ", random=" << options.random_222_models
           << ") distinct ncf values=" << distinct.size() << " dual vertices="
           << chsh_oracle::dual_vertices().size() << " mismatches=" << mismatches;
    if (mismatches) {
        actual << " " << first;
    }
    return {"mismatches=0 over (2,2,2) corpus + >=50 random models", actual.str(),
            mismatches == 0 && options.random_222_models >= 50};
}

// Parity vector (packed, first context most significant) of PR box k:
// p(x,y) = xy + alpha x + beta y + gamma, so gamma = p00, beta = p00 + p01,
// alpha = p00 + p10 (mod 2).
unsigned pr_index_of(std::uint64_t packed) {
    const unsigned p00 = (packed >> 3) & 1;
    const unsigned p01 = (packed >> 2) & 1;
    const unsigned p10 = (packed >> 1) & 1;
    return 4 * (p00 ^ p10) + 2 * (p00 ^ p01) + p00;
}

CheckOutcome parity_222(const VerifyOptions&) {
    const auto scenario = bell_scenario(2, 2, 2);
    const auto report = parity_scan(scenario, {1, 16});
    std::set<unsigned> matched;
    std::ostringstream map;
    bool all_match = true;
    for (auto v : report.examples) {
        const unsigned k = pr_index_of(v);
        const bool same = build_symmetric_model(ParitySystem::from_packed(scenario, v)) == pr_box(k);
        all_match = all_match && same;
        if (same) {
            matched.insert(k);
        }
        map << (map.tellp() ? " " : "") << to_hex(v, 4) << "->" << k << (same ? "" : "(differs)");
    }
    std::ostringstream actual;
    actual << "unsat=" << report.unsatisfiable << " agree=" << yes_no(report.deciders_agree) << " " << map.str();
    const bool pass = report.unsatisfiable == 8 && report.deciders_agree && report.examples.size() == 8 &&
                      all_match && matched.size() == 8;
    return {"unsat=8, symmetric models = pr_box(0..7) one-to-one", actual.str(), pass};
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "PR boxes: cf = 1 and maximal marginals", 1.0, pr_boxes},
        {2, "GHZ (3,2,2): cf = 1 and maximal marginals", 1.0, ghz},
        {3, "(4,2,2) parity scan count", 60.0, parity_422},
        {4, "(4,2,2) odd P11,P12,P13 symmetric model", 5.0, parity_vector},
        {5, "No-signaling affine dimensions", 10.0, dimensions},
        {6, "Non-AMCC table reconstruction", 60.0, tables},
        {7, "cf = 1 iff strongly contextual", 300.0, equivalence},
        {8, "Simplex vs dual-vertex oracle on (2,2,2)", 120.0, oracle},
        {9, "(2,2,2) parity scan and PR boxes", 1.0, parity_222},
    };
    return list;
}

} // namespace

bool VerificationReport::overall() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : checks) {
        list.push_back({{"id", c.id},
                        {"name", c.name},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass},
                        {"seconds", c.seconds},
                        {"limit_seconds", c.limit_seconds}});
    }
    return {{"checks", list}, {"overall", overall() ? "pass" : "fail"}};
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    for (const auto& c : checks) {
        out << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << c.seconds << "s, limit "
            << c.limit_seconds << "s)\n"
            << "    expected: " << c.expected << "\n"
            << "    actual:   " << c.actual << "\n";
    }
    out << "overall: " << (overall() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

VerificationReport run_verification(const VerifyOptions& options) {
    VerificationReport report;
    for (const auto& criterion : criteria()) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), criterion.id) == options.only.end()) {
            continue;
        }
        CheckResult result{criterion.id, criterion.name, "", "", false, 0, criterion.limit_seconds};
        const auto start = std::chrono::steady_clock::now();
        try {
            auto o = criterion.run(options);
            result.expected = std::move(o.expected);
            result.actual = std::move(o.actual);
            result.pass = o.pass;
        } catch (const ResourceLimit& e) {
            result.actual = std::string{"resource limit: "} + e.what();
        } catch (const std::exception& e) {
            result.actual = std::string{"error: "} + e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.seconds > result.limit_seconds) {
            result.pass = false;
            result.actual += " [over time limit]";
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

} // namespace amcc
