#pragma once

#include "amcc/contextual_fraction.hpp"
#include "amcc/empirical_model.hpp"
#include "amcc/possibilistic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amcc {

// Closed rational interval; a missing end is unbounded.
struct ParameterInterval {
    bool empty = false;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

// {base + sum_i t_i * directions[i]}: every point satisfies normalization,
// pairwise no-signaling and the zero constraints of the support it was solved
// from. Vectors are over all (context, section) slots. Nonnegativity is only
// resolved for dimension <= 1.
struct AffineFamily {
    MeasurementScenario scenario;
    RationalVector base;
    std::vector<RationalVector> directions;
    // parameter_slots[i] is a slot where directions[i] is 1, every other
    // direction and the base are 0, so t_i can be read straight off a point.
    std::vector<std::size_t> parameter_slots;
    // Dimension 1: values of the parameter keeping every entry >= 0.
    std::optional<ParameterInterval> bounds;
    // Dimension 0: whether the unique point is nonnegative.
    std::optional<bool> base_nonnegative;

    std::size_t dimension() const { return directions.size(); }

    RationalVector point(const RationalVector& parameters) const;
    // Throws InvalidArgument if the point has a negative entry.
    EmpiricalModel model_at(const RationalVector& parameters) const;
    // Parameters of a slot vector lying in the family, if it does.
    std::optional<RationalVector> locate(const RationalVector& slots) const;
};

// Equality system (normalization + all pairwise no-signaling equalities) as
// augmented rows over the scenario's slots.
std::vector<RationalVector> no_signaling_equalities(const MeasurementScenario& scenario);

// Dimension of the affine hull of no-signaling models.
std::size_t ns_dimension(const MeasurementScenario& scenario);

// Affine family of no-signaling models vanishing outside `support`, or
// nullopt when the equality system is inconsistent. For dimension 1 the
// parameter is normalized to equal the weight of the first allowed section of
// the first context whenever that slot varies.
std::optional<AffineFamily> solve_support(const SupportModel& support);

// "q", "1/4-q", "2q-1/4", "0", ... for constant + coefficient * name.
std::string render_affine(const Rational& constant, const Rational& coefficient, const std::string& name = "q");

enum class Contextuality { Noncontextual, Contextual, MaximallyContextual };
enum class AmccClass { Amcc, NonAmcc, NotMaximal };

const char* to_string(Contextuality c);
const char* to_string(AmccClass c);

struct Classification {
    CfResult cf;
    Contextuality contextuality = Contextuality::Noncontextual;
    bool maximal_marginals = false;
    std::optional<MarginalWitness> marginal_witness;
    AmccClass amcc = AmccClass::NotMaximal;
};

// Throws PreconditionViolation on a signaling model.
Classification classify(const EmpiricalModel& model);

} // namespace amcc
