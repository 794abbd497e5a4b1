#include "amcc/csp_builder.hpp"

#include "amcc/errors.hpp"
#include "amcc/random_models.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

namespace amcc {

namespace {

using nlohmann::json;

ContextIndex context_of_settings(const MeasurementScenario& scenario, const std::vector<std::size_t>& settings) {
    const auto& shape = scenario.bell_shape();
    if (settings.size() != shape->parties) {
        throw ParseError("setting tuple has wrong length");
    }
    Context ctx;
    for (std::size_t p = 0; p < settings.size(); ++p) {
        if (settings[p] >= shape->settings) {
            throw ParseError("setting out of range");
        }
        ctx.push_back(p * shape->settings + settings[p]);
    }
    const auto c = scenario.find_context(ctx);
    if (!c) {
        throw ParseError("setting tuple does not name a context");
    }
    return *c;
}

SectionIndex parse_bits(const MeasurementScenario& scenario, ContextIndex c, const std::string& bits) {
    Section s{c, {}};
    for (char ch : bits) {
        if (ch < '0' || ch > '9') {
            throw ParseError("bad section string '" + bits + "'");
        }
        s.assignment.push_back(static_cast<Outcome>(ch - '0'));
    }
    try {
        return section_index(scenario, s);
    } catch (const InvalidArgument& e) {
        throw ParseError("bad section string '" + bits + "': " + e.what());
    }
}

std::vector<SectionIndex> opposite_parity_sections(const ParitySystem& base, ContextIndex c) {
    std::vector<SectionIndex> out;
    for (SectionIndex s = 0; s < base.scenario().section_count(c); ++s) {
        if ((std::popcount(s) & 1) != base.parity(c)) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<SectionSet> plan_sets(const AugmentationPlan& plan) {
    const auto& scenario = plan.base.scenario();
    if (plan.additions.size() != scenario.context_count()) {
        throw InvalidArgument("plan needs one addition list per context");
    }
    std::vector<SectionSet> sets;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        SectionSet set(scenario.section_count(c));
        for (SectionIndex s = 0; s < set.size(); ++s) {
            if ((std::popcount(s) & 1) == plan.base.parity(c)) {
                set.set(s);
            }
        }
        for (SectionIndex s : plan.additions[c]) {
            if (s >= set.size()) {
                throw InvalidArgument("added section out of range in context " + std::to_string(c));
            }
            if (set.test(s)) {
                throw InvalidArgument("added section " + std::to_string(s) + " of context " + std::to_string(c) +
                                      " already satisfies the parity equation or is repeated");
            }
            set.set(s);
        }
        sets.push_back(std::move(set));
    }
    return sets;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            cells.push_back(std::move(cell));
            cell.clear();
        } else if (ch != '\r') {
            cell += ch;
        }
    }
    if (quoted) {
        throw ParseError("unterminated quote in CSV line");
    }
    cells.push_back(std::move(cell));
    return cells;
}

std::string tuple_label(const std::vector<Outcome>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + std::to_string(values[i]);
    }
    return out + ")";
}

} // namespace

AugmentationPlan parse_plan(const std::string& json_text, bool printed) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string{"plan is not valid JSON: "} + e.what());
    }
    try {
        const auto& sc = doc.at("scenario");
        auto scenario = bell_scenario(sc.at("parties").get<std::size_t>(), sc.at("settings").get<std::size_t>(),
                                      sc.at("outcomes").get<std::size_t>());
        std::vector<std::uint8_t> parities(scenario.context_count(), 0);
        for (const auto& tuple : doc.at("odd_parity_contexts")) {
            parities[context_of_settings(scenario, tuple.get<std::vector<std::size_t>>())] = 1;
        }
        std::vector<std::vector<SectionIndex>> additions(scenario.context_count());
        for (const auto& entry : doc.at("additions")) {
            const ContextIndex c = context_of_settings(scenario, entry.at("settings").get<std::vector<std::size_t>>());
            const auto& list = printed && entry.contains("printed_added") ? entry.at("printed_added") : entry.at("added");
            for (const auto& bits : list) {
                additions[c].push_back(parse_bits(scenario, c, bits.get<std::string>()));
            }
            std::sort(additions[c].begin(), additions[c].end());
        }
        return AugmentationPlan{ParitySystem(std::move(scenario), std::move(parities)), std::move(additions)};
    } catch (const json::exception& e) {
        throw ParseError(std::string{"malformed plan: "} + e.what());
    }
}

AugmentationPlan paper_plan() {
    return parse_plan(bundled_plan_json(), false);
}

AugmentationPlan paper_plan_as_printed() {
    return parse_plan(bundled_plan_json(), true);
}

SupportModel apply_plan(const AugmentationPlan& plan) {
    return SupportModel(plan.base.scenario(), plan_sets(plan));
}

std::vector<std::size_t> addition_counts(const AugmentationPlan& plan) {
    std::vector<std::size_t> counts;
    for (const auto& a : plan.additions) {
        counts.push_back(a.size());
    }
    return counts;
}

std::vector<PlanHit> search_plans(const ParitySystem& base, const std::vector<std::size_t>& counts,
                                  const SearchOptions& options) {
    const auto& scenario = base.scenario();
    if (counts.size() != scenario.context_count()) {
        throw InvalidArgument("need one addition count per context");
    }
    std::vector<std::vector<SectionIndex>> candidates;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        candidates.push_back(opposite_parity_sections(base, c));
        if (counts[c] > candidates[c].size()) {
            throw InvalidArgument("context " + std::to_string(c) + " has only " +
                                  std::to_string(candidates[c].size()) + " opposite-parity sections");
        }
    }

    const SupportChecker checker(scenario);
    const unsigned workers = std::max(1u, options.threads);
    std::vector<std::vector<PlanHit>> found(workers);

    auto run = [&](unsigned w) {
        for (std::uint64_t t = w; t < options.trials; t += workers) {
            std::mt19937_64 rng(splitmix64(options.seed ^ splitmix64(t)));
            AugmentationPlan plan{base, std::vector<std::vector<SectionIndex>>(scenario.context_count())};
            for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
                // partial Fisher-Yates
                auto pool = candidates[c];
                for (std::size_t i = 0; i < counts[c]; ++i) {
                    const std::size_t j = i + static_cast<std::size_t>(draw_below(rng, pool.size() - i));
                    std::swap(pool[i], pool[j]);
                }
                plan.additions[c].assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(counts[c]));
                std::sort(plan.additions[c].begin(), plan.additions[c].end());
            }
            const auto sets = plan_sets(plan);
            if (checker.strongly_contextual(sets) && !checker.signaling_witness(sets)) {
                found[w].push_back(PlanHit{t, std::move(plan)});
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    std::vector<PlanHit> hits;
    for (auto& f : found) {
        std::move(f.begin(), f.end(), std::back_inserter(hits));
    }
    std::sort(hits.begin(), hits.end(), [](const PlanHit& a, const PlanHit& b) { return a.trial < b.trial; });
    return hits;
}

AffineEntry parse_affine(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (s.empty()) {
        throw ParseError("empty table cell");
    }
    AffineEntry entry{0, 0};
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') {
            ++j;
        }
        std::string term = s.substr(i, j - i);
        if (term.empty()) {
            throw ParseError("bad affine expression '" + text + "'");
        }
        if (term.back() == 'q') {
            term.pop_back();
            const Rational coeff = term.empty() ? Rational{1} : parse_rational(term);
            entry.coefficient += sign * coeff;
        } else {
            entry.constant += sign * parse_rational(term);
        }
        i = j;
    }
    return entry;
}

SymbolicTable parse_table_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    SymbolicTable table;
    std::size_t width = 0;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto cells = split_csv_line(line);
        if (header) {
            width = cells.size();
            header = false;
            continue;
        }
        if (cells.size() != width) {
            throw ParseError("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(width));
        }
        std::vector<AffineEntry> row;
        for (std::size_t k = 1; k < cells.size(); ++k) {
            row.push_back(parse_affine(cells[k]));
        }
        table.push_back(std::move(row));
    }
    if (table.empty()) {
        throw ParseError("CSV table has no rows");
    }
    return table;
}

std::string render_table_csv(const MeasurementScenario& scenario, const SymbolicTable& table) {
    return render_table_csv(scenario, table, 0, scenario.section_count(0));
}

std::string render_table_csv(const MeasurementScenario& scenario, const SymbolicTable& table, SectionIndex begin,
                             SectionIndex end) {
    if (table.size() != scenario.context_count()) {
        throw InvalidArgument("table row count does not match context count");
    }
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        if (scenario.section_count(c) != scenario.section_count(0) || table[c].size() != scenario.section_count(c)) {
            throw InvalidArgument("CSV layout needs every context to have the same number of sections");
        }
    }
    if (begin > end || end > scenario.section_count(0)) {
        throw InvalidArgument("bad column range");
    }
    std::string out = "context";
    for (SectionIndex s = begin; s < end; ++s) {
        out += ",\"" + tuple_label(section_at(scenario, 0, s).assignment) + "\"";
    }
    out += "\n";
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        std::vector<Outcome> settings;
        if (scenario.bell_shape()) {
            for (auto x : setting_tuple(scenario, c)) {
                settings.push_back(static_cast<Outcome>(x));
            }
        } else {
            settings.push_back(static_cast<Outcome>(c));
        }
        out += "\"" + tuple_label(settings) + "\"";
        for (SectionIndex s = begin; s < end; ++s) {
            out += "," + render_affine(table[c][s].constant, table[c][s].coefficient);
        }
        out += "\n";
    }
    return out;
}

SymbolicTable symbolic_table(const AffineFamily& family) {
    if (family.dimension() != 1) {
        throw InvalidArgument("symbolic tables need a one-parameter family");
    }
    const auto& scenario = family.scenario;
    SymbolicTable table;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        std::vector<AffineEntry> row;
        for (SectionIndex s = 0; s < scenario.section_count(c); ++s) {
            const std::size_t slot = scenario.row_offset(c) + static_cast<std::size_t>(s);
            row.push_back({family.base[slot], family.directions.front()[slot]});
        }
        table.push_back(std::move(row));
    }
    return table;
}

void TableReconstruction::verify() const {
    if (family.dimension() != 1) {
        throw VerificationFailure("family has dimension " + std::to_string(family.dimension()) + ", expected 1");
    }
    if (!diffs.empty()) {
        const auto& d = diffs.front();
        throw VerificationFailure(std::to_string(diffs.size()) + " table cells differ; first at context " +
                                  std::to_string(d.context) + ", section " + std::to_string(d.section) +
                                  ": expected " + render_affine(d.expected.constant, d.expected.coefficient) +
                                  ", got " + render_affine(d.actual.constant, d.actual.coefficient));
    }
}

TableReconstruction reconstruct_tables(const AugmentationPlan& plan, const SymbolicTable& expected) {
    auto family = solve_support(apply_plan(plan));
    if (!family) {
        throw VerificationFailure("augmented support admits no no-signaling model");
    }
    if (family->dimension() != 1) {
        throw VerificationFailure("augmented support gives a family of dimension " +
                                  std::to_string(family->dimension()) + ", expected 1");
    }
    TableReconstruction out{*family, symbolic_table(*family), {}};
    const auto& scenario = out.family.scenario;
    if (expected.size() != scenario.context_count()) {
        throw VerificationFailure("transcription has " + std::to_string(expected.size()) + " rows");
    }
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        if (expected[c].size() != scenario.section_count(c)) {
            throw VerificationFailure("transcription row " + std::to_string(c) + " has wrong width");
        }
        for (SectionIndex s = 0; s < scenario.section_count(c); ++s) {
            if (!(out.table[c][s] == expected[c][s])) {
                out.diffs.push_back({c, s, expected[c][s], out.table[c][s]});
            }
        }
    }
    return out;
}

TableReconstruction reconstruct_tables() {
    return reconstruct_tables(paper_plan(), parse_table_csv(bundled_tables_csv()));
}

} // namespace amcc
