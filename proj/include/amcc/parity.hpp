#pragma once

#include "amcc/empirical_model.hpp"
#include "amcc/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amcc {

// One GF(2) equation per context: the outcomes of the context's
// measurements sum to parities[c] (mod 2). Binary-outcome scenarios only.
class ParitySystem {
public:
    ParitySystem(MeasurementScenario scenario, std::vector<std::uint8_t> parities);

    // Packed parity vector: the first context is the most significant of
    // context_count() bits, matching section packing.
    static ParitySystem from_packed(MeasurementScenario scenario, std::uint64_t packed);

    const MeasurementScenario& scenario() const { return scenario_; }
    const std::vector<std::uint8_t>& parities() const { return parities_; }
    std::uint8_t parity(ContextIndex c) const { return parities_.at(c); }
    std::uint64_t packed() const;

private:
    MeasurementScenario scenario_;
    std::vector<std::uint8_t> parities_;
};

std::string to_hex(std::uint64_t packed, std::size_t bits);
// Accepts an optional 0x prefix. Throws ParseError.
std::uint64_t parse_hex(const std::string& text);

struct ParityDecision {
    bool satisfiable = false;
    std::optional<GlobalSection> witness;
};

enum class ParityDecider { Exhaustive, Gf2Elimination };

// Exhaustive scan over all 2^|Y| assignments.
ParityDecision parity_satisfiable_exhaustive(const ParitySystem& system);
// Gaussian elimination over GF(2); witness sets free variables to 0.
ParityDecision parity_satisfiable_gf2(const ParitySystem& system);

ParityDecision parity_satisfiable(const ParitySystem& system, ParityDecider decider = ParityDecider::Gf2Elimination);

// GF(2) rank of the linear map assignment -> per-context parities.
std::size_t parity_map_rank(const MeasurementScenario& scenario);

struct ParityScanOptions {
    unsigned threads = 1;
    std::size_t example_limit = 8;
};

struct ParityScanReport {
    std::size_t contexts = 0;
    std::uint64_t total = 0;
    std::uint64_t unsatisfiable = 0;
    std::uint64_t satisfiable = 0;
    // Per-decider unsatisfiable counts; they must match `unsatisfiable`.
    std::uint64_t exhaustive_unsatisfiable = 0;
    std::uint64_t gf2_unsatisfiable = 0;
    std::size_t rank = 0;
    // Deciders agreed on every single vector.
    bool deciders_agree = true;
    // Smallest unsatisfiable packed parity vectors, ascending.
    std::vector<std::uint64_t> examples;
};

// Classifies all 2^N parity vectors with both deciders. Throws ResourceLimit
// for N > 24 and InvalidArgument for non-binary scenarios.
ParityScanReport parity_scan(const MeasurementScenario& scenario, const ParityScanOptions& options = {});

// Uniform weight 1/2^(k-1) on each section of a size-k context whose
// outcome parity matches the context's parity bit, 0 elsewhere.
EmpiricalModel build_symmetric_model(const ParitySystem& system);

} // namespace amcc
