#pragma once

#include "amcc/rational.hpp"
#include "amcc/scenario.hpp"

#include <optional>
#include <vector>

namespace amcc {

// One exact probability distribution per context, laid out in the
// scenario's canonical context and section order.
class EmpiricalModel {
public:
    // Throws InvalidArgument unless every table has the right length, is
    // nonnegative and sums to exactly 1.
    EmpiricalModel(MeasurementScenario scenario, std::vector<RationalVector> tables);

    const MeasurementScenario& scenario() const { return scenario_; }
    const std::vector<RationalVector>& tables() const { return tables_; }
    const RationalVector& table(ContextIndex c) const { return tables_.at(c); }
    const Rational& weight(ContextIndex c, SectionIndex s) const { return tables_.at(c).at(s); }

    // All tables stacked in slot order (the vector v of M d = v).
    RationalVector stacked() const;

    bool operator==(const EmpiricalModel& other) const = default;

private:
    MeasurementScenario scenario_;
    std::vector<RationalVector> tables_;
};

struct MarginalTable {
    std::vector<MeasurementIndex> subset;
    RationalVector weights;

    bool operator==(const MarginalTable&) const = default;
};

// Marginal of context c's table onto the measurement subset U (sorted).
MarginalTable marginalize(const EmpiricalModel& model, ContextIndex c, const std::vector<MeasurementIndex>& subset);

// Marginal of an arbitrary distribution over the measurement set `from`
// (sections in canonical order) onto `onto`.
MarginalTable marginalize_table(const MeasurementScenario& scenario, const std::vector<MeasurementIndex>& from,
                                const RationalVector& weights, const std::vector<MeasurementIndex>& onto);

struct SignalingWitness {
    ContextIndex first = 0;
    ContextIndex second = 0;
    std::vector<MeasurementIndex> overlap;
    std::vector<Outcome> section;
    Rational first_marginal;
    Rational second_marginal;
};

struct NoSignalingCheck {
    bool holds = true;
    std::optional<SignalingWitness> witness;
};

NoSignalingCheck is_no_signaling(const EmpiricalModel& model);

struct MarginalWitness {
    ContextIndex context = 0;
    std::vector<MeasurementIndex> subset;
    std::vector<Outcome> section;
    Rational weight;
    Rational expected;
};

struct MaximalMarginalsCheck {
    bool holds = true;
    std::optional<MarginalWitness> witness;
};

// Every marginal onto a nonempty proper subset of a context is uniform.
// Throws PreconditionViolation on a signaling model.
MaximalMarginalsCheck is_maximal_marginals(const EmpiricalModel& model);

// Convex mixture weight*a + (1-weight)*b over the same scenario.
EmpiricalModel mix(const Rational& weight, const EmpiricalModel& a, const EmpiricalModel& b);

} // namespace amcc
