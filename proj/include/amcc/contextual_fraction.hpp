#pragma once

#include "amcc/empirical_model.hpp"
#include "amcc/lp.hpp"

#include <optional>
#include <utility>

namespace amcc {

struct Decomposition {
    EmpiricalModel noncontextual;
    EmpiricalModel strongly_contextual;
};

struct CfResult {
    Rational cf;
    Rational ncf;
    // Sub-distribution over global sections (canonical order) with mass ncf
    // whose image under the incidence matrix is dominated by the model.
    RationalVector nc_part;
    // Present when 0 < ncf < 1: model = ncf * noncontextual + cf * strongly_contextual.
    std::optional<Decomposition> decomposition;
    std::size_t pivots = 0;
};

// LP for the noncontextual fraction: maximize sum(b) s.t. M b <= v, b >= 0.
LinearProgram noncontextual_fraction_lp(const EmpiricalModel& model);

// Feasibility of M d = v, d >= 0. Throws PreconditionViolation on a
// signaling model.
bool is_noncontextual(const EmpiricalModel& model);

// Throws PreconditionViolation on a signaling model.
CfResult contextual_fraction(const EmpiricalModel& model);

} // namespace amcc
