#include "amcc/io.hpp"

#include "amcc/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace amcc::io {

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw ParseError("expected a rational as an \"a/b\" string, got " + j.dump());
}

json rational_vector(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(to_fraction_string(x));
    }
    return out;
}

std::vector<RationalVector> split_slots(const MeasurementScenario& scenario, const RationalVector& slots) {
    std::vector<RationalVector> tables;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        const auto begin = slots.begin() + static_cast<std::ptrdiff_t>(scenario.row_offset(c));
        tables.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(scenario.section_count(c)));
    }
    return tables;
}

json slot_tables(const MeasurementScenario& scenario, const RationalVector& slots) {
    json out = json::array();
    for (const auto& t : split_slots(scenario, slots)) {
        out.push_back(rational_vector(t));
    }
    return out;
}

RationalVector read_slot_tables(const MeasurementScenario& scenario, const json& j) {
    if (!j.is_array() || j.size() != scenario.context_count()) {
        throw ParseError("expected one table per context");
    }
    RationalVector slots;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        if (!j[c].is_array() || j[c].size() != scenario.section_count(c)) {
            throw ParseError("table " + std::to_string(c) + " has the wrong number of entries");
        }
        for (const auto& x : j[c]) {
            slots.push_back(rational_from_json(x));
        }
    }
    return slots;
}

json slot_ref(const MeasurementScenario& scenario, std::size_t slot) {
    ContextIndex c = 0;
    while (c + 1 < scenario.context_count() && scenario.row_offset(c + 1) <= slot) {
        ++c;
    }
    return {{"context", c}, {"section", slot - scenario.row_offset(c)}};
}

json assignment_json(const std::vector<Outcome>& a) {
    return json(a);
}

std::string bits_of(const MeasurementScenario& scenario, ContextIndex c, SectionIndex s) {
    std::string out;
    for (Outcome o : section_at(scenario, c, s).assignment) {
        out += std::to_string(o);
    }
    return out;
}

template <typename F>
auto wrap(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

} // namespace

json to_json(const MeasurementScenario& scenario) {
    if (const auto& shape = scenario.bell_shape()) {
        return {{"parties", shape->parties}, {"settings", shape->settings}, {"outcomes", shape->outcomes}};
    }
    return {{"measurements", scenario.labels()}, {"cover", scenario.cover()}, {"outcomes", scenario.arities()}};
}

MeasurementScenario scenario_from_json(const json& j) {
    return wrap([&] {
        if (!j.is_object()) {
            throw ParseError("scenario must be an object");
        }
        if (j.contains("parties")) {
            return bell_scenario(j.at("parties").get<std::size_t>(), j.at("settings").get<std::size_t>(),
                                 j.at("outcomes").get<std::size_t>());
        }
        const auto labels = j.at("measurements").get<std::vector<std::string>>();
        std::map<std::string, MeasurementIndex> by_label;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            by_label[labels[i]] = i;
        }
        std::vector<Context> cover;
        for (const auto& ctx : j.at("cover")) {
            Context c;
            for (const auto& m : ctx) {
                if (m.is_string()) {
                    const auto it = by_label.find(m.get<std::string>());
                    if (it == by_label.end()) {
                        throw ParseError("unknown measurement label " + m.dump());
                    }
                    c.push_back(it->second);
                } else {
                    c.push_back(m.get<MeasurementIndex>());
                }
            }
            cover.push_back(std::move(c));
        }
        std::vector<Outcome> arities;
        const auto& o = j.at("outcomes");
        if (o.is_number_integer()) {
            arities.assign(labels.size(), o.get<Outcome>());
        } else {
            arities = o.get<std::vector<Outcome>>();
        }
        return MeasurementScenario(labels, std::move(cover), std::move(arities));
    });
}

json to_json(const EmpiricalModel& model) {
    json tables = json::array();
    for (const auto& t : model.tables()) {
        tables.push_back(rational_vector(t));
    }
    return {{"scenario", to_json(model.scenario())}, {"tables", tables}};
}

EmpiricalModel model_from_json(const json& j) {
    return wrap([&] {
        auto scenario = scenario_from_json(j.at("scenario"));
        auto tables = split_slots(scenario, read_slot_tables(scenario, j.at("tables")));
        return EmpiricalModel(std::move(scenario), std::move(tables));
    });
}

json to_json(const SupportModel& support) {
    json tables = json::array();
    for (const auto& set : support.supports()) {
        json row = json::array();
        for (std::size_t s = 0; s < set.size(); ++s) {
            row.push_back(set.test(s) ? 1 : 0);
        }
        tables.push_back(row);
    }
    return {{"scenario", to_json(support.scenario())}, {"tables", tables}};
}

SupportModel support_from_json(const json& j) {
    return wrap([&] {
        auto scenario = scenario_from_json(j.at("scenario"));
        const auto slots = read_slot_tables(scenario, j.at("tables"));
        std::vector<SectionSet> sets;
        for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
            SectionSet set(scenario.section_count(c));
            for (std::size_t s = 0; s < set.size(); ++s) {
                const auto& x = slots[scenario.row_offset(c) + s];
                if (x != 0 && x != 1) {
                    throw ParseError("support entries must be 0 or 1");
                }
                set[s] = x == 1;
            }
            sets.push_back(std::move(set));
        }
        return SupportModel(std::move(scenario), std::move(sets));
    });
}

json to_json(const AffineFamily& family) {
    json out{{"scenario", to_json(family.scenario)},
             {"dimension", family.dimension()},
             {"base", slot_tables(family.scenario, family.base)}};
    json dirs = json::array();
    for (const auto& d : family.directions) {
        dirs.push_back(slot_tables(family.scenario, d));
    }
    out["directions"] = dirs;
    json params = json::array();
    for (std::size_t slot : family.parameter_slots) {
        params.push_back(slot_ref(family.scenario, slot));
    }
    out["parameter_slots"] = params;
    if (family.bounds) {
        json b{{"empty", family.bounds->empty}};
        b["lower"] = family.bounds->lower ? json(to_fraction_string(*family.bounds->lower)) : json(nullptr);
        b["upper"] = family.bounds->upper ? json(to_fraction_string(*family.bounds->upper)) : json(nullptr);
        out["bounds"] = b;
    }
    if (family.base_nonnegative) {
        out["base_nonnegative"] = *family.base_nonnegative;
    }
    return out;
}

AffineFamily family_from_json(const json& j) {
    return wrap([&] {
        auto scenario = scenario_from_json(j.at("scenario"));
        AffineFamily family{scenario, read_slot_tables(scenario, j.at("base")), {}, {}, std::nullopt, std::nullopt};
        for (const auto& d : j.at("directions")) {
            family.directions.push_back(read_slot_tables(scenario, d));
        }
        for (const auto& p : j.at("parameter_slots")) {
            const auto c = p.at("context").get<ContextIndex>();
            const auto s = p.at("section").get<std::size_t>();
            if (c >= scenario.context_count() || s >= scenario.section_count(c)) {
                throw ParseError("parameter slot out of range");
            }
            family.parameter_slots.push_back(scenario.row_offset(c) + s);
        }
        if (family.parameter_slots.size() != family.directions.size()) {
            throw ParseError("need one parameter slot per direction");
        }
        if (j.contains("bounds")) {
            const auto& b = j.at("bounds");
            ParameterInterval interval;
            interval.empty = b.value("empty", false);
            if (b.contains("lower") && !b.at("lower").is_null()) {
                interval.lower = rational_from_json(b.at("lower"));
            }
            if (b.contains("upper") && !b.at("upper").is_null()) {
                interval.upper = rational_from_json(b.at("upper"));
            }
            family.bounds = interval;
        }
        if (j.contains("base_nonnegative")) {
            family.base_nonnegative = j.at("base_nonnegative").get<bool>();
        }
        return family;
    });
}

json to_json(const CfResult& result) {
    json out{{"cf", to_fraction_string(result.cf)}, {"ncf", to_fraction_string(result.ncf)}, {"pivots", result.pivots}};
    if (result.decomposition) {
        out["decomposition"] = {{"noncontextual", to_json(result.decomposition->noncontextual)},
                                {"strongly_contextual", to_json(result.decomposition->strongly_contextual)}};
    }
    return out;
}

json to_json(const MarginalWitness& w, const MeasurementScenario& scenario) {
    std::vector<std::string> labels;
    for (auto m : w.subset) {
        labels.push_back(scenario.labels()[m]);
    }
    return {{"context", w.context},       {"subset", labels},
            {"section", assignment_json(w.section)}, {"weight", to_fraction_string(w.weight)},
            {"expected", to_fraction_string(w.expected)}};
}

json to_json(const Classification& c) {
    return {{"cf", to_fraction_string(c.cf.cf)},
            {"ncf", to_fraction_string(c.cf.ncf)},
            {"contextuality", to_string(c.contextuality)},
            {"maximal_marginals", c.maximal_marginals},
            {"class", to_string(c.amcc)}};
}

json to_json(const ParityScanReport& r) {
    json examples = json::array();
    for (auto e : r.examples) {
        examples.push_back(to_hex(e, r.contexts));
    }
    return {{"contexts", r.contexts},
            {"total", r.total},
            {"unsatisfiable", r.unsatisfiable},
            {"satisfiable", r.satisfiable},
            {"exhaustive_unsatisfiable", r.exhaustive_unsatisfiable},
            {"gf2_unsatisfiable", r.gf2_unsatisfiable},
            {"rank", r.rank},
            {"deciders_agree", r.deciders_agree},
            {"unsatisfiable_examples", examples}};
}

json to_json(const NoSignalingCheck& check, const MeasurementScenario& scenario) {
    json out{{"no_signaling", check.holds}};
    if (check.witness) {
        const auto& w = *check.witness;
        std::vector<std::string> labels;
        for (auto m : w.overlap) {
            labels.push_back(scenario.labels()[m]);
        }
        out["witness"] = {{"first", w.first},
                          {"second", w.second},
                          {"overlap", labels},
                          {"section", assignment_json(w.section)},
                          {"first_marginal", to_fraction_string(w.first_marginal)},
                          {"second_marginal", to_fraction_string(w.second_marginal)}};
    }
    return out;
}

json to_json(const AugmentationPlan& plan) {
    const auto& scenario = plan.base.scenario();
    const auto& shape = scenario.bell_shape();
    if (!shape) {
        throw InvalidArgument("plan JSON needs a Bell scenario");
    }
    json odd = json::array();
    json additions = json::array();
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        if (plan.base.parity(c)) {
            odd.push_back(setting_tuple(scenario, c));
        }
        if (!plan.additions[c].empty()) {
            json added = json::array();
            for (auto s : plan.additions[c]) {
                added.push_back(bits_of(scenario, c, s));
            }
            additions.push_back({{"settings", setting_tuple(scenario, c)}, {"added", added}});
        }
    }
    return {{"scenario", to_json(scenario)}, {"odd_parity_contexts", odd}, {"additions", additions}};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string{"invalid JSON: "} + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_file(const std::string& path) {
    return parse_text(read_text_file(path));
}

std::string model_csv(const EmpiricalModel& model) {
    SymbolicTable table;
    for (const auto& t : model.tables()) {
        std::vector<AffineEntry> row;
        for (const auto& w : t) {
            row.push_back({w, 0});
        }
        table.push_back(std::move(row));
    }
    return render_table_csv(model.scenario(), table);
}

} // namespace amcc::io
