#pragma once

#include "amcc/empirical_model.hpp"
#include "amcc/parity.hpp"

#include <string>
#include <vector>

namespace amcc {

// PR box k of the (2,2,2) scenario, k = 4*alpha + 2*beta + gamma: weight 1/2
// on every section with a XOR b = x*y XOR alpha*x XOR beta*y XOR gamma.
EmpiricalModel pr_box(unsigned k);

// GHZ-type parity model on (3,2,2): odd parity on the three contexts with
// exactly two primed settings, even parity elsewhere; 1/4 on each allowed
// section.
ParitySystem ghz_parity_system();
EmpiricalModel ghz_322();

// (4,2,2) parity system with P11 = P12 = P13 = 1 and all other parities 0.
ParitySystem parity_amcc_422_system();
EmpiricalModel parity_amcc_422();

EmpiricalModel uniform(const MeasurementScenario& scenario);
EmpiricalModel deterministic(const MeasurementScenario& scenario, const GlobalSection& global);

// Named lookup. Accepted names:
//   pr_box(k)                      k in 0..7
//   ghz_322
//   parity_amcc_422
//   uniform(n,m,o)
//   deterministic(n,m,o;d1d2...)   one outcome digit per measurement
//   noisy_pr_box(k,lambda)         lambda*pr_box(k) + (1-lambda)*uniform
// Throws InvalidArgument for anything else.
EmpiricalModel corpus(const std::string& name);

// Names of the fixed corpus members (PR boxes, GHZ, parity AMCC, uniform
// models of the small Bell scenarios).
std::vector<std::string> corpus_names();

} // namespace amcc
