#include "amcc/scenario.hpp"

#include "amcc/errors.hpp"

#include <algorithm>
#include <set>

namespace amcc {

MeasurementScenario::MeasurementScenario(std::vector<std::string> labels, std::vector<Context> cover,
                                         std::vector<Outcome> arities)
    : labels_(std::move(labels)), cover_(std::move(cover)), arities_(std::move(arities)) {
    const std::size_t n = labels_.size();
    if (n == 0) {
        throw InvalidArgument("scenario has no measurements");
    }
    if (arities_.size() != n) {
        throw InvalidArgument("outcome arity list does not match measurement count");
    }
    for (Outcome a : arities_) {
        if (a == 0) {
            throw InvalidArgument("outcome arity must be at least 1");
        }
    }
    if (cover_.empty()) {
        throw InvalidArgument("cover has no contexts");
    }
    for (auto& ctx : cover_) {
        std::sort(ctx.begin(), ctx.end());
        if (ctx.empty()) {
            throw InvalidArgument("empty context in cover");
        }
        if (std::adjacent_find(ctx.begin(), ctx.end()) != ctx.end()) {
            throw InvalidArgument("context repeats a measurement");
        }
        if (ctx.back() >= n) {
            throw InvalidArgument("context refers to unknown measurement");
        }
    }
    std::sort(cover_.begin(), cover_.end());
    if (std::adjacent_find(cover_.begin(), cover_.end()) != cover_.end()) {
        throw InvalidArgument("cover contains a duplicate context");
    }

    std::vector<bool> covered(n, false);
    for (const auto& ctx : cover_) {
        for (MeasurementIndex m : ctx) {
            covered[m] = true;
        }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        throw InvalidArgument("cover does not contain every measurement");
    }
    for (std::size_t i = 0; i < cover_.size(); ++i) {
        for (std::size_t j = 0; j < cover_.size(); ++j) {
            if (i != j && std::includes(cover_[j].begin(), cover_[j].end(), cover_[i].begin(), cover_[i].end())) {
                throw InvalidArgument("cover is not an antichain: a context is contained in another");
            }
        }
    }

    row_offsets_.push_back(0);
    for (const auto& ctx : cover_) {
        std::uint64_t count = 1;
        for (MeasurementIndex m : ctx) {
            count *= arities_[m];
            if (count > kMaxGlobalSections) {
                throw ResourceLimit("context has too many sections");
            }
        }
        section_counts_.push_back(count);
        row_offsets_.push_back(row_offsets_.back() + static_cast<std::size_t>(count));
    }
}

const Context& MeasurementScenario::context(ContextIndex c) const {
    if (c >= cover_.size()) {
        throw InvalidArgument("unknown context " + std::to_string(c));
    }
    return cover_[c];
}

bool MeasurementScenario::all_binary() const {
    return std::all_of(arities_.begin(), arities_.end(), [](Outcome a) { return a == 2; });
}

std::uint64_t MeasurementScenario::global_count() const {
    std::uint64_t count = 1;
    for (Outcome a : arities_) {
        count *= a;
        if (count > kMaxGlobalSections) {
            throw ResourceLimit("global section space exceeds enumeration limit");
        }
    }
    return count;
}

std::optional<ContextIndex> MeasurementScenario::find_context(const Context& measurements) const {
    const auto it = std::lower_bound(cover_.begin(), cover_.end(), measurements);
    if (it == cover_.end() || *it != measurements) {
        return std::nullopt;
    }
    return static_cast<ContextIndex>(it - cover_.begin());
}

bool MeasurementScenario::operator==(const MeasurementScenario& other) const {
    return labels_ == other.labels_ && cover_ == other.cover_ && arities_ == other.arities_;
}

MeasurementScenario bell_scenario(std::size_t parties, std::size_t settings_per_party, std::size_t outcomes) {
    if (parties == 0 || settings_per_party == 0 || outcomes == 0) {
        throw InvalidArgument("Bell scenario counts must all be at least 1");
    }
    std::uint64_t contexts = 1;
    for (std::size_t p = 0; p < parties; ++p) {
        contexts *= settings_per_party;
        if (contexts > kMaxGlobalSections) {
            throw ResourceLimit("Bell scenario has too many contexts");
        }
    }

    std::vector<std::string> labels;
    for (std::size_t p = 0; p < parties; ++p) {
        for (std::size_t x = 0; x < settings_per_party; ++x) {
            labels.push_back("Y" + std::to_string(p + 1) + std::string(x, '\''));
        }
    }

    std::vector<Context> cover;
    for (std::uint64_t c = 0; c < contexts; ++c) {
        Context ctx(parties);
        std::uint64_t rest = c;
        for (std::size_t p = parties; p-- > 0;) {
            ctx[p] = p * settings_per_party + static_cast<std::size_t>(rest % settings_per_party);
            rest /= settings_per_party;
        }
        cover.push_back(std::move(ctx));
    }

    MeasurementScenario scenario(std::move(labels), std::move(cover),
                                 std::vector<Outcome>(parties * settings_per_party, static_cast<Outcome>(outcomes)));
    scenario.bell_ = BellShape{parties, settings_per_party, outcomes};
    return scenario;
}

std::vector<std::size_t> setting_tuple(const MeasurementScenario& scenario, ContextIndex c) {
    const auto& shape = scenario.bell_shape();
    if (!shape) {
        throw InvalidArgument("setting tuples are only defined for Bell scenarios");
    }
    std::vector<std::size_t> settings;
    for (MeasurementIndex m : scenario.context(c)) {
        settings.push_back(m % shape->settings);
    }
    return settings;
}

namespace {

SectionIndex pack(const std::vector<Outcome>& values, const std::vector<MeasurementIndex>& measurements,
                  const MeasurementScenario& scenario) {
    SectionIndex index = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Outcome arity = scenario.arity(measurements[i]);
        if (values[i] >= arity) {
            throw InvalidArgument("outcome value out of range");
        }
        index = index * arity + values[i];
    }
    return index;
}

std::vector<Outcome> unpack(SectionIndex index, const std::vector<MeasurementIndex>& measurements,
                            const MeasurementScenario& scenario) {
    std::vector<Outcome> values(measurements.size());
    for (std::size_t i = measurements.size(); i-- > 0;) {
        const Outcome arity = scenario.arity(measurements[i]);
        values[i] = static_cast<Outcome>(index % arity);
        index /= arity;
    }
    if (index != 0) {
        throw InvalidArgument("section index out of range");
    }
    return values;
}

std::vector<MeasurementIndex> all_measurements(const MeasurementScenario& scenario) {
    std::vector<MeasurementIndex> all(scenario.measurement_count());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    return all;
}

} // namespace

std::vector<GlobalSection> enumerate_global_sections(const MeasurementScenario& scenario) {
    const std::uint64_t count = scenario.global_count();
    std::vector<GlobalSection> globals;
    globals.reserve(count);
    for (SectionIndex g = 0; g < count; ++g) {
        globals.push_back(global_at(scenario, g));
    }
    return globals;
}

SectionIndex section_index(const MeasurementScenario& scenario, const Section& section) {
    const Context& ctx = scenario.context(section.context);
    if (section.assignment.size() != ctx.size()) {
        throw InvalidArgument("section length does not match context size");
    }
    return pack(section.assignment, ctx, scenario);
}

Section section_at(const MeasurementScenario& scenario, ContextIndex c, SectionIndex index) {
    return Section{c, unpack(index, scenario.context(c), scenario)};
}

SectionIndex global_index(const MeasurementScenario& scenario, const GlobalSection& global) {
    if (global.assignment.size() != scenario.measurement_count()) {
        throw InvalidArgument("global section length does not match measurement count");
    }
    return pack(global.assignment, all_measurements(scenario), scenario);
}

GlobalSection global_at(const MeasurementScenario& scenario, SectionIndex index) {
    return GlobalSection{unpack(index, all_measurements(scenario), scenario)};
}

std::vector<Outcome> project(const std::vector<MeasurementIndex>& from, const std::vector<Outcome>& values,
                             const std::vector<MeasurementIndex>& onto) {
    if (from.size() != values.size()) {
        throw InvalidArgument("assignment length does not match its measurement set");
    }
    std::vector<Outcome> out;
    out.reserve(onto.size());
    std::size_t i = 0;
    for (MeasurementIndex m : onto) {
        while (i < from.size() && from[i] < m) {
            ++i;
        }
        if (i == from.size() || from[i] != m) {
            throw InvalidArgument("projection target is not a subset of the source measurements");
        }
        out.push_back(values[i]);
    }
    return out;
}

Section restrict(const MeasurementScenario& scenario, const GlobalSection& global, ContextIndex c) {
    const Context& ctx = scenario.context(c);
    if (global.assignment.size() != scenario.measurement_count()) {
        throw InvalidArgument("global section length does not match measurement count");
    }
    Section s{c, {}};
    s.assignment.reserve(ctx.size());
    for (MeasurementIndex m : ctx) {
        s.assignment.push_back(global.assignment[m]);
    }
    return s;
}

Context intersect(const Context& a, const Context& b) {
    Context out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

RestrictionMap::RestrictionMap(const MeasurementScenario& scenario)
    : globals_(scenario.global_count()), contexts_(scenario.context_count()) {
    table_.resize(contexts_ * globals_);
    const std::size_t n = scenario.measurement_count();
    std::vector<Outcome> values(n, 0);
    for (SectionIndex g = 0; g < globals_; ++g) {
        for (ContextIndex c = 0; c < contexts_; ++c) {
            SectionIndex s = 0;
            for (MeasurementIndex m : scenario.context(c)) {
                s = s * scenario.arity(m) + values[m];
            }
            table_[c * globals_ + g] = s;
        }
        // odometer increment, last measurement fastest
        for (std::size_t i = n; i-- > 0;) {
            if (++values[i] < scenario.arity(i)) {
                break;
            }
            values[i] = 0;
        }
    }
}

IncidenceMatrix incidence_matrix(const MeasurementScenario& scenario) {
    const RestrictionMap restriction(scenario);
    IncidenceMatrix m(scenario.slot_count(), static_cast<std::size_t>(restriction.global_count()));
    for (SectionIndex g = 0; g < restriction.global_count(); ++g) {
        for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
            m.set(scenario.row_offset(c) + static_cast<std::size_t>(restriction.section_of(g, c)), g, 1);
        }
    }
    return m;
}

} // namespace amcc
