#include "amcc/possibilistic.hpp"

#include "amcc/errors.hpp"

#include <algorithm>

namespace amcc {

SupportModel::SupportModel(MeasurementScenario scenario, std::vector<SectionSet> supports)
    : scenario_(std::move(scenario)), supports_(std::move(supports)) {
    if (supports_.size() != scenario_.context_count()) {
        throw InvalidArgument("support has wrong number of contexts");
    }
    for (ContextIndex c = 0; c < supports_.size(); ++c) {
        if (supports_[c].size() != scenario_.section_count(c)) {
            throw InvalidArgument("support of context " + std::to_string(c) + " has wrong width");
        }
        if (supports_[c].none()) {
            throw InvalidArgument("support of context " + std::to_string(c) + " is empty");
        }
    }
}

SupportModel full_support(const MeasurementScenario& scenario) {
    std::vector<SectionSet> sets;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        sets.emplace_back(scenario.section_count(c));
        sets.back().set();
    }
    return SupportModel(scenario, std::move(sets));
}

SupportModel support_of(const EmpiricalModel& model) {
    const auto& scenario = model.scenario();
    std::vector<SectionSet> sets;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        SectionSet set(scenario.section_count(c));
        for (std::size_t s = 0; s < set.size(); ++s) {
            if (sgn(model.weight(c, s)) > 0) {
                set.set(s);
            }
        }
        sets.push_back(std::move(set));
    }
    return SupportModel(scenario, std::move(sets));
}

std::vector<SectionIndex> compatible_globals(const SupportModel& support) {
    return SupportChecker(support.scenario()).compatible_globals(support.supports());
}

bool strong_contextuality(const SupportModel& support) {
    return compatible_globals(support).empty();
}

BooleanFormula formula_of(const SupportModel& support) {
    BooleanFormula formula;
    for (ContextIndex c = 0; c < support.scenario().context_count(); ++c) {
        BooleanProposition p{c, {}};
        const SectionSet& set = support.support(c);
        for (auto s = set.find_first(); s != SectionSet::npos; s = set.find_next(s)) {
            p.statements.push_back(s);
        }
        formula.propositions.push_back(std::move(p));
    }
    return formula;
}

bool evaluate(const MeasurementScenario& scenario, const BooleanFormula& formula, const GlobalSection& global) {
    if (formula.propositions.size() != scenario.context_count()) {
        throw InvalidArgument("formula needs exactly one proposition per context");
    }
    for (const auto& p : formula.propositions) {
        const SectionIndex local = section_index(scenario, restrict(scenario, global, p.context));
        bool any = false;
        for (SectionIndex s : p.statements) {
            if (s == local) {
                any = true;
                break;
            }
        }
        if (!any) {
            return false;
        }
    }
    return true;
}

std::string render_statement(const MeasurementScenario& scenario, ContextIndex c, SectionIndex s) {
    if (!scenario.all_binary()) {
        throw InvalidArgument("Boolean statements need binary outcomes");
    }
    const Section section = section_at(scenario, c, s);
    const Context& ctx = scenario.context(c);
    std::string out = "(";
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i > 0) {
            out += " ∧ ";
        }
        if (section.assignment[i] == 0) {
            out += "¬";
        }
        out += scenario.labels()[ctx[i]];
    }
    return out + ")";
}

std::string render_proposition(const MeasurementScenario& scenario, const BooleanProposition& proposition) {
    std::string out;
    for (SectionIndex s : proposition.statements) {
        if (!out.empty()) {
            out += " ∨ ";
        }
        out += render_statement(scenario, proposition.context, s);
    }
    return out;
}

std::optional<PossibilisticSignalingWitness> possibilistic_signaling_witness(const SupportModel& support) {
    return SupportChecker(support.scenario()).signaling_witness(support.supports());
}

bool possibilistic_no_signaling(const SupportModel& support) {
    return !possibilistic_signaling_witness(support).has_value();
}

SupportChecker::SupportChecker(const MeasurementScenario& scenario) : restriction_(scenario) {
    for (ContextIndex a = 0; a < scenario.context_count(); ++a) {
        for (ContextIndex b = a + 1; b < scenario.context_count(); ++b) {
            Overlap o;
            o.first = a;
            o.second = b;
            const Context overlap = intersect(scenario.context(a), scenario.context(b));
            o.size = 1;
            for (MeasurementIndex m : overlap) {
                o.size *= scenario.arity(m);
            }
            auto index_table = [&](ContextIndex c) {
                std::vector<std::uint64_t> table(scenario.section_count(c));
                for (SectionIndex s = 0; s < table.size(); ++s) {
                    const auto values = project(scenario.context(c), section_at(scenario, c, s).assignment, overlap);
                    std::uint64_t idx = 0;
                    for (std::size_t i = 0; i < overlap.size(); ++i) {
                        idx = idx * scenario.arity(overlap[i]) + values[i];
                    }
                    table[s] = idx;
                }
                return table;
            };
            o.first_index = index_table(a);
            o.second_index = index_table(b);
            overlaps_.push_back(std::move(o));
        }
    }
}

std::vector<SectionIndex> SupportChecker::compatible_globals(const std::vector<SectionSet>& supports) const {
    if (supports.size() != restriction_.context_count()) {
        throw InvalidArgument("support has wrong number of contexts");
    }
    std::vector<SectionIndex> out;
    for (SectionIndex g = 0; g < restriction_.global_count(); ++g) {
        bool ok = true;
        for (ContextIndex c = 0; c < restriction_.context_count() && ok; ++c) {
            ok = supports[c].test(restriction_.section_of(g, c));
        }
        if (ok) {
            out.push_back(g);
        }
    }
    return out;
}

bool SupportChecker::strongly_contextual(const std::vector<SectionSet>& supports) const {
    if (supports.size() != restriction_.context_count()) {
        throw InvalidArgument("support has wrong number of contexts");
    }
    for (SectionIndex g = 0; g < restriction_.global_count(); ++g) {
        bool ok = true;
        for (ContextIndex c = 0; c < restriction_.context_count() && ok; ++c) {
            ok = supports[c].test(restriction_.section_of(g, c));
        }
        if (ok) {
            return false;
        }
    }
    return true;
}

std::optional<PossibilisticSignalingWitness>
SupportChecker::signaling_witness(const std::vector<SectionSet>& supports) const {
    if (supports.size() != restriction_.context_count()) {
        throw InvalidArgument("support has wrong number of contexts");
    }
    SectionSet lhs;
    SectionSet rhs;
    for (const auto& o : overlaps_) {
        lhs.clear();
        rhs.clear();
        lhs.resize(o.size);
        rhs.resize(o.size);
        const SectionSet& a = supports[o.first];
        for (auto s = a.find_first(); s != SectionSet::npos; s = a.find_next(s)) {
            lhs.set(o.first_index[s]);
        }
        const SectionSet& b = supports[o.second];
        for (auto s = b.find_first(); s != SectionSet::npos; s = b.find_next(s)) {
            rhs.set(o.second_index[s]);
        }
        if (lhs != rhs) {
            return PossibilisticSignalingWitness{o.first, o.second};
        }
    }
    return std::nullopt;
}

} // namespace amcc
