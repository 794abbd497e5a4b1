#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace amcc {

struct CheckResult {
    int id = 0;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool overall() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    // Replacement transcription / plan files for the table reconstruction
    // check; unset means the bundled data.
    std::optional<std::string> tables_path;
    std::optional<std::string> plan_path;
    std::uint64_t seed = 20260101;
    std::size_t random_models = 300;
    std::size_t random_222_models = 200;
    // Subset of criteria to run (1..9); empty runs all.
    std::vector<int> only;
};

// Runs the acceptance criteria 1-9. Each check catches its own exceptions,
// and a check that overruns its time limit fails.
VerificationReport run_verification(const VerifyOptions& options = {});

} // namespace amcc
