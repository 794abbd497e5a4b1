#include "amcc/parity.hpp"

#include "amcc/errors.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace amcc {

namespace {

constexpr std::size_t kMaxScanContexts = 24;

void require_binary(const MeasurementScenario& scenario) {
    if (!scenario.all_binary()) {
        throw InvalidArgument("parity systems need binary outcomes");
    }
    if (scenario.measurement_count() > 64) {
        throw InvalidArgument("parity systems support at most 64 measurements");
    }
}

// Bit mask of a context's measurements within a packed global index
// (measurement 0 is the most significant bit).
std::uint64_t context_mask(const MeasurementScenario& scenario, ContextIndex c) {
    const std::size_t n = scenario.measurement_count();
    std::uint64_t mask = 0;
    for (MeasurementIndex m : scenario.context(c)) {
        mask |= std::uint64_t{1} << (n - 1 - m);
    }
    return mask;
}

std::vector<std::uint64_t> context_masks(const MeasurementScenario& scenario) {
    std::vector<std::uint64_t> masks;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        masks.push_back(context_mask(scenario, c));
    }
    return masks;
}

// Packed parity vector produced by the assignment `global`.
std::uint64_t parities_of(std::uint64_t global, const std::vector<std::uint64_t>& masks) {
    std::uint64_t packed = 0;
    for (std::uint64_t mask : masks) {
        packed = (packed << 1) | static_cast<std::uint64_t>(std::popcount(global & mask) & 1);
    }
    return packed;
}

struct Gf2Row {
    std::uint64_t coeffs;
    std::uint8_t rhs;
};

// Reduced row echelon form; returns false on an inconsistent row.
bool eliminate(std::vector<Gf2Row>& rows, std::vector<int>& pivot_bits) {
    std::size_t rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        const std::uint64_t b = std::uint64_t{1} << bit;
        std::size_t p = rank;
        while (p < rows.size() && !(rows[p].coeffs & b)) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r].coeffs & b)) {
                rows[r].coeffs ^= rows[rank].coeffs;
                rows[r].rhs ^= rows[rank].rhs;
            }
        }
        pivot_bits.push_back(bit);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r].rhs) {
            return false;
        }
    }
    rows.resize(rank);
    return true;
}

bool gf2_consistent(const std::vector<std::uint64_t>& masks, std::uint64_t packed) {
    std::vector<Gf2Row> rows;
    const std::size_t n = masks.size();
    for (std::size_t c = 0; c < n; ++c) {
        rows.push_back({masks[c], static_cast<std::uint8_t>((packed >> (n - 1 - c)) & 1)});
    }
    std::vector<int> pivots;
    return eliminate(rows, pivots);
}

} // namespace

ParitySystem::ParitySystem(MeasurementScenario scenario, std::vector<std::uint8_t> parities)
    : scenario_(std::move(scenario)), parities_(std::move(parities)) {
    require_binary(scenario_);
    if (parities_.size() != scenario_.context_count()) {
        throw InvalidArgument("parity vector length does not match context count");
    }
    for (auto p : parities_) {
        if (p > 1) {
            throw InvalidArgument("parity bits must be 0 or 1");
        }
    }
}

ParitySystem ParitySystem::from_packed(MeasurementScenario scenario, std::uint64_t packed) {
    const std::size_t n = scenario.context_count();
    if (n > 64 || (n < 64 && (packed >> n) != 0)) {
        throw InvalidArgument("packed parity vector has bits beyond the context count");
    }
    std::vector<std::uint8_t> bits(n);
    for (std::size_t c = 0; c < n; ++c) {
        bits[c] = static_cast<std::uint8_t>((packed >> (n - 1 - c)) & 1);
    }
    return ParitySystem(std::move(scenario), std::move(bits));
}

std::uint64_t ParitySystem::packed() const {
    std::uint64_t out = 0;
    for (auto p : parities_) {
        out = (out << 1) | p;
    }
    return out;
}

std::string to_hex(std::uint64_t packed, std::size_t bits) {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t width = std::max<std::size_t>(1, (bits + 3) / 4);
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        out[width - 1 - i] = digits[(packed >> (4 * i)) & 0xf];
    }
    return "0x" + out;
}

std::uint64_t parse_hex(const std::string& text) {
    std::string_view s = text;
    if (s.starts_with("0x") || s.starts_with("0X")) {
        s.remove_prefix(2);
    }
    if (s.empty() || s.size() > 16) {
        throw ParseError("bad hex parity vector: '" + text + "'");
    }
    std::uint64_t value = 0;
    for (char ch : s) {
        int d;
        if (ch >= '0' && ch <= '9') {
            d = ch - '0';
        } else if (ch >= 'a' && ch <= 'f') {
            d = ch - 'a' + 10;
        } else if (ch >= 'A' && ch <= 'F') {
            d = ch - 'A' + 10;
        } else {
            throw ParseError("bad hex parity vector: '" + text + "'");
        }
        value = (value << 4) | static_cast<std::uint64_t>(d);
    }
    return value;
}

ParityDecision parity_satisfiable_exhaustive(const ParitySystem& system) {
    const auto& scenario = system.scenario();
    const auto masks = context_masks(scenario);
    const std::uint64_t target = system.packed();
    const std::uint64_t globals = scenario.global_count();
    for (std::uint64_t g = 0; g < globals; ++g) {
        if (parities_of(g, masks) == target) {
            return {true, global_at(scenario, g)};
        }
    }
    return {};
}

ParityDecision parity_satisfiable_gf2(const ParitySystem& system) {
    const auto& scenario = system.scenario();
    const std::size_t n = scenario.measurement_count();
    std::vector<Gf2Row> rows;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        rows.push_back({context_mask(scenario, c), system.parity(c)});
    }
    std::vector<int> pivots;
    if (!eliminate(rows, pivots)) {
        return {};
    }
    // Reduced form: each row fixes its pivot variable given free vars = 0.
    GlobalSection witness{std::vector<Outcome>(n, 0)};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        witness.assignment[n - 1 - static_cast<std::size_t>(pivots[r])] = rows[r].rhs;
    }
    return {true, std::move(witness)};
}

ParityDecision parity_satisfiable(const ParitySystem& system, ParityDecider decider) {
    return decider == ParityDecider::Exhaustive ? parity_satisfiable_exhaustive(system)
                                                : parity_satisfiable_gf2(system);
}

std::size_t parity_map_rank(const MeasurementScenario& scenario) {
    require_binary(scenario);
    std::vector<Gf2Row> rows;
    for (auto mask : context_masks(scenario)) {
        rows.push_back({mask, 0});
    }
    std::vector<int> pivots;
    eliminate(rows, pivots);
    return pivots.size();
}

ParityScanReport parity_scan(const MeasurementScenario& scenario, const ParityScanOptions& options) {
    require_binary(scenario);
    const std::size_t n = scenario.context_count();
    if (n > kMaxScanContexts) {
        throw ResourceLimit("parity scan over 2^" + std::to_string(n) + " vectors exceeds the 2^24 limit");
    }
    const auto masks = context_masks(scenario);
    const std::uint64_t globals = scenario.global_count();
    std::vector<std::uint64_t> image(globals);
    for (std::uint64_t g = 0; g < globals; ++g) {
        image[g] = parities_of(g, masks);
    }

    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(total)));

    struct Chunk {
        std::uint64_t exhaustive_unsat = 0;
        std::uint64_t gf2_unsat = 0;
        bool agree = true;
        std::vector<std::uint64_t> examples;
    };
    std::vector<Chunk> chunks(workers);

    auto run = [&](unsigned w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        Chunk& out = chunks[w];
        for (std::uint64_t p = begin; p < end; ++p) {
            // exhaustive: does any of the 2^|Y| assignments produce p?
            const bool brute = std::find(image.begin(), image.end(), p) != image.end();
            const bool linear = gf2_consistent(masks, p);
            out.exhaustive_unsat += brute ? 0 : 1;
            out.gf2_unsat += linear ? 0 : 1;
            out.agree = out.agree && brute == linear;
            if (!brute && out.examples.size() < options.example_limit) {
                out.examples.push_back(p);
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    ParityScanReport report;
    report.contexts = n;
    report.total = total;
    report.rank = parity_map_rank(scenario);
    for (const auto& c : chunks) {
        report.exhaustive_unsatisfiable += c.exhaustive_unsat;
        report.gf2_unsatisfiable += c.gf2_unsat;
        report.deciders_agree = report.deciders_agree && c.agree;
        for (auto e : c.examples) {
            if (report.examples.size() < options.example_limit) {
                report.examples.push_back(e);
            }
        }
    }
    report.deciders_agree = report.deciders_agree && report.exhaustive_unsatisfiable == report.gf2_unsatisfiable;
    report.unsatisfiable = report.exhaustive_unsatisfiable;
    report.satisfiable = total - report.unsatisfiable;
    return report;
}

EmpiricalModel build_symmetric_model(const ParitySystem& system) {
    const auto& scenario = system.scenario();
    std::vector<RationalVector> tables;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        const std::size_t k = scenario.context(c).size();
        const Rational weight{mpz_class{1}, mpz_class{1} << static_cast<mp_bitcnt_t>(k - 1)};
        RationalVector t(scenario.section_count(c), Rational{0});
        for (SectionIndex s = 0; s < t.size(); ++s) {
            if ((std::popcount(s) & 1) == system.parity(c)) {
                t[s] = weight;
            }
        }
        tables.push_back(std::move(t));
    }
    return EmpiricalModel(scenario, std::move(tables));
}

} // namespace amcc
