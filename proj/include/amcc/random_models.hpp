#pragma once

#include "amcc/empirical_model.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace amcc {

// splitmix64 finalizer, used to derive independent per-item seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Uniform draw from [0, bound) by rejection on raw 64-bit output; identical
// on every standard library, unlike std::uniform_int_distribution.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

// Random no-signaling models built as small convex mixtures of no-signaling
// vertices: deterministic models, symmetric parity models (binary scenarios)
// and mod-3 PR-type boxes for (2,2,3). Item i depends only on (seed, i).
class ModelSampler {
public:
    explicit ModelSampler(std::uint64_t seed) : seed_(seed) {}

    // Cycles through (2,2,2), (3,2,2), (2,3,2) and (2,2,3).
    EmpiricalModel small(std::uint64_t i) const;
    // (2,2,2) mixtures of up to six vertices.
    EmpiricalModel bipartite_binary(std::uint64_t i) const;

private:
    EmpiricalModel sample(const MeasurementScenario& scenario, std::uint64_t i, std::uint64_t max_parts) const;

    std::uint64_t seed_;
};

} // namespace amcc
