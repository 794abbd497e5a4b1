#include "amcc/empirical_model.hpp"

#include "amcc/errors.hpp"

#include <algorithm>

namespace amcc {

EmpiricalModel::EmpiricalModel(MeasurementScenario scenario, std::vector<RationalVector> tables)
    : scenario_(std::move(scenario)), tables_(std::move(tables)) {
    if (tables_.size() != scenario_.context_count()) {
        throw InvalidArgument("model has " + std::to_string(tables_.size()) + " tables for " +
                              std::to_string(scenario_.context_count()) + " contexts");
    }
    for (ContextIndex c = 0; c < tables_.size(); ++c) {
        const auto& t = tables_[c];
        if (t.size() != scenario_.section_count(c)) {
            throw InvalidArgument("table for context " + std::to_string(c) + " has wrong length");
        }
        Rational total = 0;
        for (const auto& w : t) {
            if (sgn(w) < 0) {
                throw InvalidArgument("negative weight in context " + std::to_string(c));
            }
            total += w;
        }
        if (total != 1) {
            throw InvalidArgument("context " + std::to_string(c) + " weights sum to " + to_string(total));
        }
    }
}

RationalVector EmpiricalModel::stacked() const {
    RationalVector v;
    v.reserve(scenario_.slot_count());
    for (const auto& t : tables_) {
        v.insert(v.end(), t.begin(), t.end());
    }
    return v;
}

namespace {

std::uint64_t sections_over(const MeasurementScenario& scenario, const std::vector<MeasurementIndex>& measurements) {
    std::uint64_t count = 1;
    for (MeasurementIndex m : measurements) {
        count *= scenario.arity(m);
    }
    return count;
}

std::vector<Outcome> decode(const MeasurementScenario& scenario, const std::vector<MeasurementIndex>& measurements,
                            std::uint64_t index) {
    std::vector<Outcome> values(measurements.size());
    for (std::size_t i = measurements.size(); i-- > 0;) {
        const Outcome a = scenario.arity(measurements[i]);
        values[i] = static_cast<Outcome>(index % a);
        index /= a;
    }
    return values;
}

std::uint64_t encode(const MeasurementScenario& scenario, const std::vector<MeasurementIndex>& measurements,
                     const std::vector<Outcome>& values) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < measurements.size(); ++i) {
        index = index * scenario.arity(measurements[i]) + values[i];
    }
    return index;
}

// Nonempty proper subsets of a context, smallest first.
std::vector<std::vector<MeasurementIndex>> proper_subsets(const Context& ctx) {
    std::vector<std::vector<MeasurementIndex>> out;
    const std::size_t k = ctx.size();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
        std::vector<MeasurementIndex> sub;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> (k - 1 - i) & 1) {
                sub.push_back(ctx[i]);
            }
        }
        out.push_back(std::move(sub));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

} // namespace

MarginalTable marginalize_table(const MeasurementScenario& scenario, const std::vector<MeasurementIndex>& from,
                                const RationalVector& weights, const std::vector<MeasurementIndex>& onto) {
    if (!std::includes(from.begin(), from.end(), onto.begin(), onto.end())) {
        throw InvalidArgument("marginal subset is not contained in the source measurement set");
    }
    if (weights.size() != sections_over(scenario, from)) {
        throw InvalidArgument("distribution length does not match its measurement set");
    }
    MarginalTable out{onto, RationalVector(sections_over(scenario, onto), Rational{0})};
    for (std::uint64_t s = 0; s < weights.size(); ++s) {
        if (sgn(weights[s]) == 0) {
            continue;
        }
        const auto values = decode(scenario, from, s);
        out.weights[encode(scenario, onto, project(from, values, onto))] += weights[s];
    }
    return out;
}

MarginalTable marginalize(const EmpiricalModel& model, ContextIndex c, const std::vector<MeasurementIndex>& subset) {
    const auto& scenario = model.scenario();
    std::vector<MeasurementIndex> onto = subset;
    std::sort(onto.begin(), onto.end());
    return marginalize_table(scenario, scenario.context(c), model.table(c), onto);
}

NoSignalingCheck is_no_signaling(const EmpiricalModel& model) {
    const auto& scenario = model.scenario();
    for (ContextIndex a = 0; a < scenario.context_count(); ++a) {
        for (ContextIndex b = a + 1; b < scenario.context_count(); ++b) {
            const Context overlap = intersect(scenario.context(a), scenario.context(b));
            const auto lhs = marginalize(model, a, overlap);
            const auto rhs = marginalize(model, b, overlap);
            for (std::uint64_t s = 0; s < lhs.weights.size(); ++s) {
                if (lhs.weights[s] != rhs.weights[s]) {
                    return {false, SignalingWitness{a, b, overlap, decode(scenario, overlap, s), lhs.weights[s],
                                                    rhs.weights[s]}};
                }
            }
        }
    }
    return {};
}

MaximalMarginalsCheck is_maximal_marginals(const EmpiricalModel& model) {
    if (!is_no_signaling(model).holds) {
        throw PreconditionViolation("maximal-marginals check needs a no-signaling model");
    }
    const auto& scenario = model.scenario();
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        for (const auto& subset : proper_subsets(scenario.context(c))) {
            const auto marginal = marginalize(model, c, subset);
            const Rational expected = Rational{1} / Rational{static_cast<unsigned long>(marginal.weights.size())};
            for (std::uint64_t s = 0; s < marginal.weights.size(); ++s) {
                if (marginal.weights[s] != expected) {
                    return {false, MarginalWitness{c, subset, decode(scenario, subset, s), marginal.weights[s],
                                                   expected}};
                }
            }
        }
    }
    return {};
}

EmpiricalModel mix(const Rational& weight, const EmpiricalModel& a, const EmpiricalModel& b) {
    if (!(a.scenario() == b.scenario())) {
        throw InvalidArgument("cannot mix models over different scenarios");
    }
    if (sgn(weight) < 0 || weight > 1) {
        throw InvalidArgument("mixing weight outside [0, 1]");
    }
    std::vector<RationalVector> tables = a.tables();
    const Rational rest = 1 - weight;
    for (ContextIndex c = 0; c < tables.size(); ++c) {
        for (std::size_t s = 0; s < tables[c].size(); ++s) {
            tables[c][s] = weight * tables[c][s] + rest * b.table(c)[s];
        }
    }
    return EmpiricalModel(a.scenario(), std::move(tables));
}

} // namespace amcc
