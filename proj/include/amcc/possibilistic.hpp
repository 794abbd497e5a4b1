#pragma once

#include "amcc/empirical_model.hpp"
#include "amcc/scenario.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace amcc {

using SectionSet = boost::dynamic_bitset<>;

// Boolean-semiring shadow of an empirical model: the allowed sections of each
// context, as bitsets over canonical section indices.
class SupportModel {
public:
    // Throws InvalidArgument if a set has the wrong width or is empty.
    SupportModel(MeasurementScenario scenario, std::vector<SectionSet> supports);

    const MeasurementScenario& scenario() const { return scenario_; }
    const std::vector<SectionSet>& supports() const { return supports_; }
    const SectionSet& support(ContextIndex c) const { return supports_.at(c); }
    bool allows(ContextIndex c, SectionIndex s) const { return supports_.at(c).test(s); }

    bool operator==(const SupportModel& other) const {
        return scenario_ == other.scenario_ && supports_ == other.supports_;
    }

private:
    MeasurementScenario scenario_;
    std::vector<SectionSet> supports_;
};

SupportModel full_support(const MeasurementScenario& scenario);

SupportModel support_of(const EmpiricalModel& model);

// Global sections (canonical indices, ascending) whose restriction to every
// context is allowed. Exhaustive scan.
std::vector<SectionIndex> compatible_globals(const SupportModel& support);

bool strong_contextuality(const SupportModel& support);

// Disjunction of b_s over the allowed sections of one context.
struct BooleanProposition {
    ContextIndex context = 0;
    std::vector<SectionIndex> statements;
};

// Conjunction of one proposition per context.
struct BooleanFormula {
    std::vector<BooleanProposition> propositions;
};

BooleanFormula formula_of(const SupportModel& support);

bool evaluate(const MeasurementScenario& scenario, const BooleanFormula& formula, const GlobalSection& global);

// Renders b_s, e.g. "(¬Y1 ∧ Y2 ∧ ¬Y3 ∧ Y4')". Binary scenarios only.
std::string render_statement(const MeasurementScenario& scenario, ContextIndex c, SectionIndex s);
std::string render_proposition(const MeasurementScenario& scenario, const BooleanProposition& proposition);

struct PossibilisticSignalingWitness {
    ContextIndex first = 0;
    ContextIndex second = 0;
};

// Projections of every pair of supports onto their overlap agree as sets.
std::optional<PossibilisticSignalingWitness> possibilistic_signaling_witness(const SupportModel& support);

bool possibilistic_no_signaling(const SupportModel& support);

// Precomputed restriction and overlap-projection tables for one scenario, so
// repeated support checks (randomized searches, parity scans) skip the
// per-call setup. Works on raw per-context section sets.
class SupportChecker {
public:
    explicit SupportChecker(const MeasurementScenario& scenario);

    std::vector<SectionIndex> compatible_globals(const std::vector<SectionSet>& supports) const;
    bool strongly_contextual(const std::vector<SectionSet>& supports) const;
    std::optional<PossibilisticSignalingWitness> signaling_witness(const std::vector<SectionSet>& supports) const;

private:
    struct Overlap {
        ContextIndex first = 0;
        ContextIndex second = 0;
        std::size_t size = 0;
        std::vector<std::uint64_t> first_index;
        std::vector<std::uint64_t> second_index;
    };

    RestrictionMap restriction_;
    std::vector<Overlap> overlaps_;
};

} // namespace amcc
