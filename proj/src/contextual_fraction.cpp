#include "amcc/contextual_fraction.hpp"

#include "amcc/errors.hpp"

namespace amcc {

namespace {

void require_no_signaling(const EmpiricalModel& model, const char* what) {
    if (!is_no_signaling(model).holds) {
        throw PreconditionViolation(std::string{what} + " needs a no-signaling model");
    }
}

LinearProgram incidence_lp(const EmpiricalModel& model, Sense sense) {
    const IncidenceMatrix m = incidence_matrix(model.scenario());
    LinearProgram lp;
    lp.objective.assign(m.cols(), Rational{sense == Sense::LessEqual ? 1 : 0});
    lp.rhs = model.stacked();
    lp.sense.assign(m.rows(), sense);
    lp.rows.assign(m.rows(), RationalVector(m.cols(), Rational{0}));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t g = 0; g < m.cols(); ++g) {
            if (m.at(r, g) != 0) {
                lp.rows[r][g] = 1;
            }
        }
    }
    return lp;
}

// Tables of M b, i.e. the local image of a global (sub-)distribution.
std::vector<RationalVector> local_image(const MeasurementScenario& scenario, const RationalVector& global_weights) {
    const RestrictionMap restriction(scenario);
    std::vector<RationalVector> tables(scenario.context_count());
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        tables[c].assign(scenario.section_count(c), Rational{0});
    }
    for (SectionIndex g = 0; g < global_weights.size(); ++g) {
        if (sgn(global_weights[g]) == 0) {
            continue;
        }
        for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
            tables[c][restriction.section_of(g, c)] += global_weights[g];
        }
    }
    return tables;
}

} // namespace

LinearProgram noncontextual_fraction_lp(const EmpiricalModel& model) {
    return incidence_lp(model, Sense::LessEqual);
}

bool is_noncontextual(const EmpiricalModel& model) {
    require_no_signaling(model, "noncontextuality check");
    return simplex_solve(incidence_lp(model, Sense::Equal)).status == LpStatus::Optimal;
}

CfResult contextual_fraction(const EmpiricalModel& model) {
    require_no_signaling(model, "contextual fraction");
    const LpSolution sol = simplex_solve(noncontextual_fraction_lp(model));
    if (sol.status != LpStatus::Optimal) {
        // b = 0 is always feasible and sum(b) <= 1, so this cannot happen.
        throw VerificationFailure(std::string{"noncontextual-fraction LP ended "} + to_string(sol.status));
    }

    CfResult result;
    result.ncf = sol.value;
    result.cf = 1 - sol.value;
    result.nc_part = sol.assignment;
    result.pivots = sol.pivots;

    if (sgn(result.ncf) > 0 && sgn(result.cf) > 0) {
        const auto& scenario = model.scenario();
        auto nc_tables = local_image(scenario, result.nc_part);
        std::vector<RationalVector> sc_tables(scenario.context_count());
        for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
            sc_tables[c].resize(nc_tables[c].size());
            for (std::size_t s = 0; s < nc_tables[c].size(); ++s) {
                sc_tables[c][s] = (model.weight(c, s) - nc_tables[c][s]) / result.cf;
                nc_tables[c][s] /= result.ncf;
            }
        }
        result.decomposition = Decomposition{EmpiricalModel(scenario, std::move(nc_tables)),
                                             EmpiricalModel(scenario, std::move(sc_tables))};
    }
    return result;
}

} // namespace amcc
