#include "amcc/support_solver.hpp"

#include "amcc/errors.hpp"
#include "amcc/linear_algebra.hpp"

namespace amcc {

namespace {

std::vector<std::vector<std::size_t>> sections_by_overlap(const MeasurementScenario& scenario, ContextIndex c,
                                                          const Context& overlap, std::size_t overlap_size) {
    std::vector<std::vector<std::size_t>> groups(overlap_size);
    for (SectionIndex s = 0; s < scenario.section_count(c); ++s) {
        const auto values = project(scenario.context(c), section_at(scenario, c, s).assignment, overlap);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < overlap.size(); ++i) {
            idx = idx * scenario.arity(overlap[i]) + values[i];
        }
        groups[idx].push_back(scenario.row_offset(c) + static_cast<std::size_t>(s));
    }
    return groups;
}

void nonnegative_interval(AffineFamily& family) {
    ParameterInterval interval;
    const auto& dir = family.directions.front();
    for (std::size_t i = 0; i < family.base.size(); ++i) {
        const int d = sgn(dir[i]);
        if (d == 0) {
            if (sgn(family.base[i]) < 0) {
                interval.empty = true;
            }
            continue;
        }
        const Rational bound = -family.base[i] / dir[i];
        if (d > 0 && (!interval.lower || bound > *interval.lower)) {
            interval.lower = bound;
        }
        if (d < 0 && (!interval.upper || bound < *interval.upper)) {
            interval.upper = bound;
        }
    }
    if (interval.lower && interval.upper && *interval.lower > *interval.upper) {
        interval.empty = true;
    }
    family.bounds = interval;
}

} // namespace

RationalVector AffineFamily::point(const RationalVector& parameters) const {
    if (parameters.size() != directions.size()) {
        throw InvalidArgument("expected " + std::to_string(directions.size()) + " parameters");
    }
    RationalVector x = base;
    for (std::size_t i = 0; i < directions.size(); ++i) {
        if (sgn(parameters[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (sgn(directions[i][j]) != 0) {
                x[j] += parameters[i] * directions[i][j];
            }
        }
    }
    return x;
}

EmpiricalModel AffineFamily::model_at(const RationalVector& parameters) const {
    const RationalVector x = point(parameters);
    std::vector<RationalVector> tables;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        const auto begin = x.begin() + static_cast<std::ptrdiff_t>(scenario.row_offset(c));
        tables.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(scenario.section_count(c)));
    }
    return EmpiricalModel(scenario, std::move(tables));
}

std::optional<RationalVector> AffineFamily::locate(const RationalVector& slots) const {
    if (slots.size() != base.size()) {
        return std::nullopt;
    }
    RationalVector params;
    for (std::size_t slot : parameter_slots) {
        params.push_back(slots[slot]);
    }
    if (point(params) != slots) {
        return std::nullopt;
    }
    return params;
}

std::vector<RationalVector> no_signaling_equalities(const MeasurementScenario& scenario) {
    const std::size_t n = scenario.slot_count();
    std::vector<RationalVector> rows;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        RationalVector row(n + 1, Rational{0});
        for (SectionIndex s = 0; s < scenario.section_count(c); ++s) {
            row[scenario.row_offset(c) + static_cast<std::size_t>(s)] = 1;
        }
        row[n] = 1;
        rows.push_back(std::move(row));
    }
    for (ContextIndex a = 0; a < scenario.context_count(); ++a) {
        for (ContextIndex b = a + 1; b < scenario.context_count(); ++b) {
            const Context overlap = intersect(scenario.context(a), scenario.context(b));
            std::size_t size = 1;
            for (MeasurementIndex m : overlap) {
                size *= scenario.arity(m);
            }
            const auto left = sections_by_overlap(scenario, a, overlap, size);
            const auto right = sections_by_overlap(scenario, b, overlap, size);
            for (std::size_t k = 0; k < size; ++k) {
                RationalVector row(n + 1, Rational{0});
                for (std::size_t slot : left[k]) {
                    row[slot] += 1;
                }
                for (std::size_t slot : right[k]) {
                    row[slot] -= 1;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::size_t ns_dimension(const MeasurementScenario& scenario) {
    const std::size_t n = scenario.slot_count();
    return n - row_reduce(no_signaling_equalities(scenario), n).pivots.size();
}

std::optional<AffineFamily> solve_support(const SupportModel& support) {
    const auto& scenario = support.scenario();
    const std::size_t n = scenario.slot_count();

    // Zero constraints remove every slot outside the support.
    std::vector<std::size_t> live;
    for (ContextIndex c = 0; c < scenario.context_count(); ++c) {
        for (SectionIndex s = 0; s < scenario.section_count(c); ++s) {
            if (support.allows(c, s)) {
                live.push_back(scenario.row_offset(c) + static_cast<std::size_t>(s));
            }
        }
    }
    const std::size_t k = live.size();
    std::vector<RationalVector> reduced;
    for (const auto& row : no_signaling_equalities(scenario)) {
        RationalVector r(k + 1, Rational{0});
        r[k] = row[n];
        bool any = sgn(row[n]) != 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (sgn(row[live[j]]) != 0) {
                r[j] = row[live[j]];
                any = true;
            }
        }
        if (any) {
            reduced.push_back(std::move(r));
        }
    }

    const RowEchelon echelon = row_reduce(std::move(reduced), k);
    if (!echelon.consistent) {
        return std::nullopt;
    }

    AffineFamily family{scenario, RationalVector(n, Rational{0}), {}, {}, std::nullopt, std::nullopt};
    std::vector<bool> is_pivot(k, false);
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
        is_pivot[echelon.pivots[r]] = true;
        family.base[live[echelon.pivots[r]]] = echelon.rows[r][k];
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (is_pivot[j]) {
            continue;
        }
        RationalVector dir(n, Rational{0});
        dir[live[j]] = 1;
        for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
            if (sgn(echelon.rows[r][j]) != 0) {
                dir[live[echelon.pivots[r]]] = -echelon.rows[r][j];
            }
        }
        family.directions.push_back(std::move(dir));
        family.parameter_slots.push_back(live[j]);
    }

    if (family.dimension() == 0) {
        bool nonnegative = true;
        for (const auto& x : family.base) {
            nonnegative = nonnegative && sgn(x) >= 0;
        }
        family.base_nonnegative = nonnegative;
    } else if (family.dimension() == 1) {
        // Re-anchor the parameter on the first allowed slot that varies,
        // preferring the first allowed section of the first context.
        auto& dir = family.directions.front();
        std::size_t anchor = n;
        for (std::size_t slot : live) {
            if (sgn(dir[slot]) != 0) {
                anchor = slot;
                break;
            }
        }
        const Rational scale = dir[anchor];
        for (auto& d : dir) {
            d /= scale;
        }
        const Rational shift = family.base[anchor];
        for (std::size_t j = 0; j < n; ++j) {
            family.base[j] -= shift * dir[j];
        }
        family.parameter_slots = {anchor};
        nonnegative_interval(family);
    }
    return family;
}

std::string render_affine(const Rational& constant, const Rational& coefficient, const std::string& name) {
    auto term = [&](const Rational& c) {
        const Rational a = abs(c);
        return (a == 1 ? std::string{} : to_string(a)) + name;
    };
    if (sgn(coefficient) == 0) {
        return to_string(constant);
    }
    if (sgn(constant) == 0) {
        return (sgn(coefficient) < 0 ? "-" : "") + term(coefficient);
    }
    // Positive part first: "1/4-q", "2q-1/4", "1/4+q".
    if (sgn(coefficient) > 0) {
        return sgn(constant) > 0 ? to_string(constant) + "+" + term(coefficient)
                                 : term(coefficient) + "-" + to_string(Rational{-constant});
    }
    return sgn(constant) > 0 ? to_string(constant) + "-" + term(coefficient)
                             : "-" + to_string(Rational{-constant}) + "-" + term(coefficient);
}

const char* to_string(Contextuality c) {
    switch (c) {
    case Contextuality::Noncontextual:
        return "noncontextual";
    case Contextuality::Contextual:
        return "contextual";
    case Contextuality::MaximallyContextual:
        return "maximally_contextual";
    }
    return "?";
}

const char* to_string(AmccClass c) {
    switch (c) {
    case AmccClass::Amcc:
        return "AMCC";
    case AmccClass::NonAmcc:
        return "non-AMCC";
    case AmccClass::NotMaximal:
        return "not maximally contextual";
    }
    return "?";
}

Classification classify(const EmpiricalModel& model) {
    Classification out;
    out.cf = contextual_fraction(model);
    out.contextuality = sgn(out.cf.cf) == 0 ? Contextuality::Noncontextual
                        : out.cf.cf == 1    ? Contextuality::MaximallyContextual
                                            : Contextuality::Contextual;
    const auto marginals = is_maximal_marginals(model);
    out.maximal_marginals = marginals.holds;
    out.marginal_witness = marginals.witness;
    if (out.contextuality == Contextuality::MaximallyContextual) {
        out.amcc = out.maximal_marginals ? AmccClass::Amcc : AmccClass::NonAmcc;
    }
    return out;
}

} // namespace amcc
