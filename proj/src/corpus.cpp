#include "amcc/corpus.hpp"

#include "amcc/errors.hpp"

#include <regex>

namespace amcc {

EmpiricalModel pr_box(unsigned k) {
    if (k > 7) {
        throw InvalidArgument("PR box index must be in 0..7");
    }
    const unsigned alpha = (k >> 2) & 1;
    const unsigned beta = (k >> 1) & 1;
    const unsigned gamma = k & 1;
    const auto scenario = bell_scenario(2, 2, 2);
    std::vector<RationalVector> tables;
    for (ContextIndex c = 0; c < 4; ++c) {
        const auto xy = setting_tuple(scenario, c);
        const unsigned target = (xy[0] * xy[1]) ^ (alpha * xy[0]) ^ (beta * xy[1]) ^ gamma;
        RationalVector t(4, Rational{0});
        for (unsigned a = 0; a < 2; ++a) {
            for (unsigned b = 0; b < 2; ++b) {
                if ((a ^ b) == target) {
                    t[a * 2 + b] = make_rational(1, 2);
                }
            }
        }
        tables.push_back(std::move(t));
    }
    return EmpiricalModel(scenario, std::move(tables));
}

ParitySystem ghz_parity_system() {
    auto scenario = bell_scenario(3, 2, 2);
    std::vector<std::uint8_t> parities;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        const auto settings = setting_tuple(scenario, c);
        std::size_t primed = 0;
        for (auto x : settings) {
            primed += x;
        }
        parities.push_back(primed == 2 ? 1 : 0);
    }
    return ParitySystem(std::move(scenario), std::move(parities));
}

EmpiricalModel ghz_322() {
    return build_symmetric_model(ghz_parity_system());
}

ParitySystem parity_amcc_422_system() {
    std::vector<std::uint8_t> parities(16, 0);
    parities[10] = parities[11] = parities[12] = 1;
    return ParitySystem(bell_scenario(4, 2, 2), std::move(parities));
}

EmpiricalModel parity_amcc_422() {
    return build_symmetric_model(parity_amcc_422_system());
}

EmpiricalModel uniform(const MeasurementScenario& scenario) {
    std::vector<RationalVector> tables;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        const auto count = scenario.section_count(c);
        tables.emplace_back(count, Rational{mpz_class{1}, mpz_class{std::to_string(count)}});
    }
    for (auto& t : tables) {
        for (auto& w : t) {
            w.canonicalize();
        }
    }
    return EmpiricalModel(scenario, std::move(tables));
}

EmpiricalModel deterministic(const MeasurementScenario& scenario, const GlobalSection& global) {
    std::vector<RationalVector> tables;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        RationalVector t(scenario.section_count(c), Rational{0});
        t[section_index(scenario, restrict(scenario, global, c))] = 1;
        tables.push_back(std::move(t));
    }
    return EmpiricalModel(scenario, std::move(tables));
}

namespace {

std::size_t to_count(const std::string& s) {
    return static_cast<std::size_t>(std::stoul(s));
}

} // namespace

EmpiricalModel corpus(const std::string& name) {
    static const std::regex pr_re{R"(pr_box\(([0-7])\))"};
    static const std::regex uniform_re{R"(uniform\((\d+),(\d+),(\d+)\))"};
    static const std::regex det_re{R"(deterministic\((\d+),(\d+),(\d+);(\d+)\))"};
    static const std::regex noisy_re{R"(noisy_pr_box\(([0-7]),(\d+(?:/\d+)?)\))"};
    std::smatch m;
    if (std::regex_match(name, m, pr_re)) {
        return pr_box(static_cast<unsigned>(std::stoul(m[1])));
    }
    if (name == "ghz_322") {
        return ghz_322();
    }
    if (name == "parity_amcc_422") {
        return parity_amcc_422();
    }
    if (std::regex_match(name, m, uniform_re)) {
        return uniform(bell_scenario(to_count(m[1]), to_count(m[2]), to_count(m[3])));
    }
    if (std::regex_match(name, m, det_re)) {
        const auto scenario = bell_scenario(to_count(m[1]), to_count(m[2]), to_count(m[3]));
        const std::string digits = m[4];
        if (digits.size() != scenario.measurement_count()) {
            throw InvalidArgument("deterministic model needs one outcome per measurement");
        }
        GlobalSection g;
        for (char d : digits) {
            g.assignment.push_back(static_cast<Outcome>(d - '0'));
        }
        return deterministic(scenario, g);
    }
    if (std::regex_match(name, m, noisy_re)) {
        const auto box = pr_box(static_cast<unsigned>(std::stoul(m[1])));
        return mix(parse_rational(m[2].str()), box, uniform(box.scenario()));
    }
    throw InvalidArgument("unknown corpus model '" + name + "'");
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (int k = 0; k < 8; ++k) {
        names.push_back("pr_box(" + std::to_string(k) + ")");
    }
    names.insert(names.end(), {"ghz_322", "parity_amcc_422", "uniform(2,2,2)", "uniform(3,2,2)", "uniform(4,2,2)",
                               "deterministic(2,2,2;0110)", "deterministic(4,2,2;01010101)",
                               "noisy_pr_box(0,3/4)"});
    return names;
}

} // namespace amcc
