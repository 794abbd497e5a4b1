#include "amcc/random_models.hpp"

#include "amcc/corpus.hpp"
#include "amcc/parity.hpp"

#include <limits>

namespace amcc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

namespace {

EmpiricalModel random_vertex(const MeasurementScenario& scenario, std::mt19937_64& rng) {
    const auto& shape = scenario.bell_shape();
    const bool mod3_box = shape && shape->parties == 2 && shape->settings == 2 && shape->outcomes == 3;
    if (draw_below(rng, 3) == 0) {
        GlobalSection g;
        for (MeasurementIndex m = 0; m < scenario.measurement_count(); ++m) {
            g.assignment.push_back(static_cast<Outcome>(draw_below(rng, scenario.arity(m))));
        }
        return deterministic(scenario, g);
    }
    if (scenario.all_binary()) {
        std::vector<std::uint8_t> parities;
        for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
            parities.push_back(static_cast<std::uint8_t>(draw_below(rng, 2)));
        }
        return build_symmetric_model(ParitySystem(scenario, std::move(parities)));
    }
    if (mod3_box) {
        // b - a = f(x, y) mod 3, uniform over the three solutions
        std::vector<RationalVector> tables;
        for (ContextIndex c = 0; c < 4; ++c) {
            const auto f = draw_below(rng, 3);
            RationalVector t(9, Rational{0});
            for (unsigned a = 0; a < 3; ++a) {
                t[a * 3 + (a + f) % 3] = make_rational(1, 3);
            }
            tables.push_back(std::move(t));
        }
        return EmpiricalModel(scenario, std::move(tables));
    }
    return uniform(scenario);
}

} // namespace

EmpiricalModel ModelSampler::sample(const MeasurementScenario& scenario, std::uint64_t i, std::uint64_t max_parts) const {
    std::mt19937_64 rng(splitmix64(seed_ ^ splitmix64(i)));
    const auto parts = 1 + draw_below(rng, max_parts);
    std::vector<EmpiricalModel> vertices;
    std::vector<std::int64_t> weights;
    for (std::uint64_t k = 0; k < parts; ++k) {
        vertices.push_back(random_vertex(scenario, rng));
        weights.push_back(1 + static_cast<std::int64_t>(draw_below(rng, 10)));
    }
    // Fold the mixture left to right: running = sum_{j<=k} w_j v_j / W_k.
    EmpiricalModel running = vertices.front();
    std::int64_t so_far = weights.front();
    for (std::size_t k = 1; k < vertices.size(); ++k) {
        so_far += weights[k];
        running = mix(make_rational(weights[k], so_far), vertices[k], running);
    }
    return running;
}

EmpiricalModel ModelSampler::small(std::uint64_t i) const {
    static const MeasurementScenario scenarios[] = {bell_scenario(2, 2, 2), bell_scenario(3, 2, 2),
                                                    bell_scenario(2, 3, 2), bell_scenario(2, 2, 3)};
    return sample(scenarios[i % 4], i, 4);
}

EmpiricalModel ModelSampler::bipartite_binary(std::uint64_t i) const {
    static const MeasurementScenario scenario = bell_scenario(2, 2, 2);
    return sample(scenario, i, 6);
}

} // namespace amcc
