// amcc: command-line front end.
//
// Exit codes: 0 ok, 1 internal error, 2 parse / bad input, 3 precondition
// (e.g. signaling model), 4 verification failure, 5 resource limit.

#include "amcc/contextual_fraction.hpp"
#include "amcc/corpus.hpp"
#include "amcc/csp_builder.hpp"
#include "amcc/errors.hpp"
#include "amcc/io.hpp"
#include "amcc/parity.hpp"
#include "amcc/possibilistic.hpp"
#include "amcc/support_solver.hpp"
#include "amcc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace amcc;
using io::json;

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kPrecondition = 3, kVerification = 4, kResource = 5 };

std::string decimal(const Rational& r) {
    std::ostringstream out;
    out << std::setprecision(10) << to_double(r);
    return out.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write " + out_path);
    }
    out << text;
}

std::vector<std::size_t> parse_counts(const std::string& text) {
    std::vector<std::size_t> counts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            counts.push_back(std::stoul(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ParseError("bad count '" + item + "'");
        }
    }
    return counts;
}

std::vector<int> parse_ids(const std::string& text) {
    std::vector<int> ids;
    for (auto c : parse_counts(text)) {
        ids.push_back(static_cast<int>(c));
    }
    return ids;
}

void print_signaling(const NoSignalingCheck& check, const MeasurementScenario& scenario) {
    const auto& w = *check.witness;
    std::cerr << "model is signaling: contexts " << w.first << " and " << w.second << " disagree on overlap {";
    for (std::size_t i = 0; i < w.overlap.size(); ++i) {
        std::cerr << (i ? "," : "") << scenario.labels()[w.overlap[i]];
    }
    std::cerr << "} at (";
    for (std::size_t i = 0; i < w.section.size(); ++i) {
        std::cerr << (i ? "," : "") << w.section[i];
    }
    std::cerr << "): " << to_fraction_string(w.first_marginal) << " vs " << to_fraction_string(w.second_marginal)
              << "\n";
}

// Precondition failures get the witness printed before the exit code.
EmpiricalModel load_no_signaling(const std::string& path) {
    auto model = io::model_from_json(io::read_file(path));
    const auto check = is_no_signaling(model);
    if (!check.holds) {
        print_signaling(check, model.scenario());
        throw PreconditionViolation("model is signaling");
    }
    return model;
}

int cmd_cf(const std::string& path, bool as_json) {
    const auto model = load_no_signaling(path);
    const auto r = contextual_fraction(model);
    if (as_json) {
        std::cout << io::to_json(r).dump(2) << "\n";
        return kOk;
    }
    std::cout << "CF = " << to_fraction_string(r.cf) << " (" << decimal(r.cf) << ")\n"
              << "NCF = " << to_fraction_string(r.ncf) << " (" << decimal(r.ncf) << ")\n";
    return kOk;
}

int cmd_classify(const std::string& path, const std::string& q, bool as_json) {
    const auto doc = io::read_file(path);
    EmpiricalModel model = [&] {
        if (doc.contains("base")) {
            const auto family = io::family_from_json(doc);
            if (q.empty()) {
                throw ParseError("family files need --q");
            }
            if (family.dimension() != 1) {
                throw ParseError("--q needs a one-parameter family");
            }
            try {
                return family.model_at({parse_rational(q)});
            } catch (const InvalidArgument& e) {
                throw PreconditionViolation(std::string{"q outside the family's nonnegative range: "} + e.what());
            }
        }
        return io::model_from_json(doc);
    }();
    const auto check = is_no_signaling(model);
    if (!check.holds) {
        print_signaling(check, model.scenario());
        return kPrecondition;
    }
    const auto c = classify(model);
    if (as_json) {
        auto j = io::to_json(c);
        if (c.marginal_witness) {
            j["marginal_witness"] = io::to_json(*c.marginal_witness, model.scenario());
        }
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << to_string(c.amcc) << "\n"
              << "CF = " << to_fraction_string(c.cf.cf) << " (" << to_string(c.contextuality) << ")\n"
              << "maximal marginals: " << (c.maximal_marginals ? "yes" : "no") << "\n";
    if (c.marginal_witness) {
        const auto& w = *c.marginal_witness;
        std::cout << "  context " << w.context << " marginal on {";
        for (std::size_t i = 0; i < w.subset.size(); ++i) {
            std::cout << (i ? "," : "") << model.scenario().labels()[w.subset[i]];
        }
        std::cout << "} at (";
        for (std::size_t i = 0; i < w.section.size(); ++i) {
            std::cout << (i ? "," : "") << w.section[i];
        }
        std::cout << ") is " << to_fraction_string(w.weight) << ", uniform would be "
                  << to_fraction_string(w.expected) << "\n";
    }
    return kOk;
}

int cmd_marginals(const std::string& path, std::size_t k, bool as_json) {
    const auto model = load_no_signaling(path);
    const auto& scenario = model.scenario();
    json out = json::array();
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        const auto& ctx = scenario.context(c);
        if (k == 0 || k > ctx.size()) {
            continue;
        }
        // k-subsets of the context in lexicographic order
        std::vector<bool> pick(ctx.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<MeasurementIndex> subset;
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < ctx.size(); ++i) {
                if (pick[i]) {
                    subset.push_back(ctx[i]);
                    labels.push_back(scenario.labels()[ctx[i]]);
                }
            }
            const auto m = marginalize(model, c, subset);
            json weights = json::array();
            for (const auto& w : m.weights) {
                weights.push_back(to_fraction_string(w));
            }
            out.push_back({{"context", c}, {"subset", labels}, {"weights", weights}});
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    for (const auto& m : out) {
        std::cout << "context " << m["context"].get<std::size_t>() << " {";
        const auto labels = m["subset"].get<std::vector<std::string>>();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            std::cout << (i ? "," : "") << labels[i];
        }
        std::cout << "}:";
        for (const auto& w : m["weights"]) {
            std::cout << " " << w.get<std::string>();
        }
        std::cout << "\n";
    }
    return kOk;
}

int cmd_nosignaling(const std::string& path) {
    const auto model = io::model_from_json(io::read_file(path));
    const auto check = is_no_signaling(model);
    std::cout << io::to_json(check, model.scenario()).dump(2) << "\n";
    return kOk;
}

MeasurementScenario binary_bell(std::size_t n, std::size_t m) {
    return bell_scenario(n, m, 2);
}

int cmd_parity_scan(std::size_t n, std::size_t m, unsigned threads, std::size_t examples,
                    const std::string& emit_hex, const std::string& out_path) {
    const auto scenario = binary_bell(n, m);
    if (!emit_hex.empty()) {
        const auto system = ParitySystem::from_packed(scenario, parse_hex(emit_hex));
        emit(io::to_json(build_symmetric_model(system)).dump(2) + "\n", out_path);
        return kOk;
    }
    const auto report = parity_scan(scenario, {threads, examples});
    emit(io::to_json(report).dump(2) + "\n", out_path);
    return report.deciders_agree ? kOk : kVerification;
}

int cmd_emit_parity_model(std::size_t n, std::size_t m, const std::string& hex, const std::string& out_path) {
    const auto system = ParitySystem::from_packed(binary_bell(n, m), parse_hex(hex));
    emit(io::to_json(build_symmetric_model(system)).dump(2) + "\n", out_path);
    return kOk;
}

std::string halves_csv(const MeasurementScenario& scenario, const SymbolicTable& table, bool halves) {
    const auto width = scenario.section_count(0);
    if (!halves) {
        return render_table_csv(scenario, table);
    }
    return render_table_csv(scenario, table, 0, width / 2) + "\n" +
           render_table_csv(scenario, table, width / 2, width);
}

int cmd_solve_support(const std::string& path, bool csv, bool halves, const std::string& out_path) {
    const auto support = io::support_from_json(io::read_file(path));
    const auto family = solve_support(support);
    if (!family) {
        std::cerr << "no no-signaling model has this support pattern (equalities inconsistent)\n";
        return kPrecondition;
    }
    if (csv) {
        if (family->dimension() != 1) {
            std::cerr << "CSV rendering needs a one-parameter family; this one has dimension "
                      << family->dimension() << "\n";
            return kPrecondition;
        }
        emit(halves_csv(family->scenario, symbolic_table(*family), halves), out_path);
        return kOk;
    }
    emit(io::to_json(*family).dump(2) + "\n", out_path);
    return kOk;
}

int cmd_reconstruct_tables(const std::string& plan_path, const std::string& tables_path, bool printed,
                           bool halves, const std::string& out_path, const std::string& family_path,
                           const std::string& support_path) {
    const auto plan = plan_path.empty() ? parse_plan(bundled_plan_json(), printed)
                                        : parse_plan(io::read_text_file(plan_path), printed);
    const auto expected = parse_table_csv(tables_path.empty() ? bundled_tables_csv() : io::read_text_file(tables_path));
    if (!support_path.empty()) {
        emit(io::to_json(apply_plan(plan)).dump(2) + "\n", support_path);
    }
    const auto rec = reconstruct_tables(plan, expected);
    emit(halves_csv(rec.family.scenario, rec.table, halves), out_path);
    if (!family_path.empty()) {
        emit(io::to_json(rec.family).dump(2) + "\n", family_path);
    }
    const auto& b = rec.family.bounds;
    std::cerr << "dimension: " << rec.family.dimension() << "\n";
    if (b && b->lower && b->upper) {
        std::cerr << "nonnegative for q in [" << to_fraction_string(*b->lower) << ", " << to_fraction_string(*b->upper)
                  << "]\n";
    }
    std::cerr << "cells differing from the transcription: " << rec.diffs.size() << "\n";
    for (const auto& d : rec.diffs) {
        std::cerr << "  context " << d.context << " section " << d.section << ": expected "
                  << render_affine(d.expected.constant, d.expected.coefficient) << ", got "
                  << render_affine(d.actual.constant, d.actual.coefficient) << "\n";
    }
    std::cerr << (rec.ok() ? "PASS" : "FAIL") << "\n";
    return rec.ok() ? kOk : kVerification;
}

int cmd_search_plans(std::uint64_t seed, std::uint64_t trials, const std::string& counts_text,
                     const std::string& base_hex, unsigned threads, bool solve, const std::string& out_path) {
    const auto reference = paper_plan();
    const auto base = base_hex.empty() ? reference.base
                                       : ParitySystem::from_packed(bell_scenario(4, 2, 2), parse_hex(base_hex));
    const auto counts = counts_text.empty() ? addition_counts(reference) : parse_counts(counts_text);
    const auto hits = search_plans(base, counts, {trials, seed, threads});
    json list = json::array();
    for (const auto& h : hits) {
        auto j = io::to_json(h.plan);
        j["trial"] = h.trial;
        if (solve) {
            const auto family = solve_support(apply_plan(h.plan));
            json f{{"consistent", family.has_value()}};
            if (family) {
                f["dimension"] = family->dimension();
                if (family->bounds) {
                    f["nonnegative_range"] = !family->bounds->empty;
                }
                if (family->base_nonnegative) {
                    f["nonnegative_range"] = *family->base_nonnegative;
                }
            }
            j["family"] = f;
        }
        list.push_back(j);
    }
    json counts_json(counts);
    emit(json{{"seed", seed}, {"trials", trials}, {"counts", counts_json}, {"hits", list}}.dump(2) + "\n",
         out_path);
    std::cerr << hits.size() << " of " << trials << " trials passed\n";
    return kOk;
}

int cmd_verify(const std::string& tables_path, const std::string& plan_path, const std::string& only,
               bool as_json) {
    VerifyOptions options;
    if (!tables_path.empty()) {
        options.tables_path = tables_path;
    }
    if (!plan_path.empty()) {
        options.plan_path = plan_path;
    }
    if (!only.empty()) {
        options.only = parse_ids(only);
    }
    const auto report = run_verification(options);
    if (as_json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << report.to_text();
    }
    return report.overall() ? kOk : kVerification;
}

int cmd_corpus(const std::string& name, bool list, const std::string& out_path) {
    if (list || name.empty()) {
        for (const auto& n : corpus_names()) {
            std::cout << n << "\n";
        }
        return kOk;
    }
    emit(io::to_json(corpus(name)).dump(2) + "\n", out_path);
    return kOk;
}

int cmd_support(const std::string& path, bool formula) {
    const auto model = io::model_from_json(io::read_file(path));
    const auto support = support_of(model);
    if (!formula) {
        std::cout << io::to_json(support).dump(2) << "\n";
        return kOk;
    }
    for (const auto& p : formula_of(support).propositions) {
        std::cout << render_proposition(model.scenario(), p) << "\n";
    }
    const bool sc = strong_contextuality(support);
    std::cout << "strongly contextual: " << (sc ? "yes" : "no") << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact contextuality analysis of empirical models"};
    app.require_subcommand(1);
    int code = kOk;

    std::string file, out, q, hex, plan_path, tables_path, counts, base_hex, only, family_out, support_out, name;
    bool as_json = false, csv = false, halves = false, printed = false, list = false, formula = false, solve = false;
    std::size_t k = 1, n = 0, m = 0, examples = 8;
    unsigned threads = 1;
    std::uint64_t seed = 0, trials = 1000;

    auto* cf = app.add_subcommand("cf", "contextual fraction of a model");
    cf->add_option("model", file, "EmpiricalModel JSON")->required();
    cf->add_flag("--json", as_json);
    cf->callback([&] { code = cmd_cf(file, as_json); });

    auto* classify_cmd = app.add_subcommand("classify", "AMCC / non-AMCC classification");
    classify_cmd->add_option("file", file, "EmpiricalModel or AffineFamily JSON")->required();
    classify_cmd->add_option("--q", q, "parameter value for a one-parameter family, e.g. 1/8");
    classify_cmd->add_flag("--json", as_json);
    classify_cmd->callback([&] { code = cmd_classify(file, q, as_json); });

    auto* marg = app.add_subcommand("marginals", "k-measurement marginals of every context");
    marg->add_option("model", file)->required();
    marg->add_option("k", k)->required();
    marg->add_flag("--json", as_json);
    marg->callback([&] { code = cmd_marginals(file, k, as_json); });

    auto* ns = app.add_subcommand("nosignaling", "check generalized no-signaling");
    ns->add_option("model", file)->required();
    ns->callback([&] { code = cmd_nosignaling(file); });

    auto* scan = app.add_subcommand("parity-scan", "classify all parity vectors of an (n,m,2) scenario");
    scan->add_option("n", n, "parties")->required();
    scan->add_option("m", m, "settings per party")->required();
    scan->add_option("--threads", threads);
    scan->add_option("--examples", examples, "how many unsatisfiable vectors to list");
    scan->add_option("--emit-model", hex, "write the symmetric model of this parity vector instead");
    scan->add_option("-o,--out", out);
    scan->callback([&] { code = cmd_parity_scan(n, m, threads, examples, hex, out); });

    auto* epm = app.add_subcommand("emit-parity-model", "symmetric model of a parity vector");
    epm->add_option("n", n)->required();
    epm->add_option("m", m)->required();
    epm->add_option("parity", hex, "packed parity vector in hex, first context most significant")->required();
    epm->add_option("-o,--out", out);
    epm->callback([&] { code = cmd_emit_parity_model(n, m, hex, out); });

    auto* solve_cmd = app.add_subcommand("solve-support", "no-signaling models with a given support");
    solve_cmd->add_option("support", file, "SupportModel JSON")->required();
    solve_cmd->add_flag("--csv", csv, "symbolic CSV table (one-parameter families)");
    solve_cmd->add_flag("--halves", halves, "split the CSV columns into two tables");
    solve_cmd->add_option("-o,--out", out);
    solve_cmd->callback([&] { code = cmd_solve_support(file, csv, halves, out); });

    auto* rec = app.add_subcommand("reconstruct-tables", "rebuild the non-AMCC family from its support plan");
    rec->add_option("--plan", plan_path, "plan JSON (default: bundled)");
    rec->add_option("--tables", tables_path, "expected CSV (default: bundled)");
    rec->add_flag("--printed", printed, "use the uncorrected B13 list");
    rec->add_flag("--halves", halves);
    rec->add_option("-o,--out", out);
    rec->add_option("--family-out", family_out, "also write the AffineFamily JSON here");
    rec->add_option("--support-out", support_out, "also write the augmented SupportModel JSON here");
    rec->callback([&] {
        code = cmd_reconstruct_tables(plan_path, tables_path, printed, halves, out, family_out, support_out);
    });

    auto* search = app.add_subcommand("search-plans", "seeded random search for augmented supports");
    search->add_option("--seed", seed);
    search->add_option("--trials", trials);
    search->add_option("--counts", counts, "16 comma-separated addition counts (default: bundled plan)");
    search->add_option("--base", base_hex, "(4,2,2) parity vector in hex (default: 0x0038)");
    search->add_option("--threads", threads);
    search->add_flag("--solve", solve, "also solve each hit's support for its no-signaling family");
    search->add_option("-o,--out", out);
    search->callback([&] { code = cmd_search_plans(seed, trials, counts, base_hex, threads, solve, out); });

    auto* verify = app.add_subcommand("verify-paper", "run the reproduction checks");
    verify->add_flag("--json", as_json);
    verify->add_option("--tables", tables_path, "replacement table transcription");
    verify->add_option("--plan", plan_path, "replacement plan");
    verify->add_option("--only", only, "comma-separated criterion numbers");
    verify->callback([&] { code = cmd_verify(tables_path, plan_path, only, as_json); });

    auto* corpus_cmd = app.add_subcommand("corpus", "emit a built-in model as JSON");
    corpus_cmd->add_option("name", name, "e.g. pr_box(0), ghz_322, noisy_pr_box(0,3/4)");
    corpus_cmd->add_flag("--list", list);
    corpus_cmd->add_option("-o,--out", out);
    corpus_cmd->callback([&] { code = cmd_corpus(name, list, out); });

    auto* support = app.add_subcommand("support", "support of a model as SupportModel JSON");
    support->add_option("model", file)->required();
    support->add_flag("--formula", formula, "print the Boolean propositions instead");
    support->callback([&] { code = cmd_support(file, formula); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kParse;
    } catch (const PreconditionViolation& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kPrecondition;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return code;
}
