#pragma once

#include "amcc/contextual_fraction.hpp"
#include "amcc/csp_builder.hpp"
#include "amcc/empirical_model.hpp"
#include "amcc/parity.hpp"
#include "amcc/possibilistic.hpp"
#include "amcc/support_solver.hpp"

#include <json.hpp>

#include <string>

// JSON and CSV formats. Rationals are always "a/b" strings; readers also
// accept plain integers but never floats. Readers throw ParseError.
namespace amcc::io {

using nlohmann::json;

// {"parties", "settings", "outcomes"} for Bell scenarios, otherwise
// {"measurements": [labels], "cover": [[index or label, ...]], "outcomes": [arity, ...]}.
json to_json(const MeasurementScenario& scenario);
MeasurementScenario scenario_from_json(const json& j);

// {"scenario": {...}, "tables": [["1/2", "0", ...], ...]}
json to_json(const EmpiricalModel& model);
EmpiricalModel model_from_json(const json& j);

// Same shape with 0/1 entries.
json to_json(const SupportModel& support);
SupportModel support_from_json(const json& j);

json to_json(const AffineFamily& family);
AffineFamily family_from_json(const json& j);

json to_json(const CfResult& result);
json to_json(const Classification& c);
json to_json(const ParityScanReport& report);
json to_json(const NoSignalingCheck& check, const MeasurementScenario& scenario);
json to_json(const MarginalWitness& witness, const MeasurementScenario& scenario);

// Same format as data/nonamcc_plan.json (Bell scenarios only).
json to_json(const AugmentationPlan& plan);

json parse_text(const std::string& text);
json read_file(const std::string& path);
std::string read_text_file(const std::string& path);

// Exact model table as CSV in the contexts-by-sections layout.
std::string model_csv(const EmpiricalModel& model);

} // namespace amcc::io
