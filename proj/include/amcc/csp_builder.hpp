#pragma once

#include "amcc/parity.hpp"
#include "amcc/possibilistic.hpp"
#include "amcc/support_solver.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace amcc {

// Parity support plus, per context, extra sections taken from the
// opposite-parity set.
struct AugmentationPlan {
    ParitySystem base;
    std::vector<std::vector<SectionIndex>> additions;

    bool operator==(const AugmentationPlan& other) const {
        return base.packed() == other.base.packed() && base.scenario() == other.base.scenario() &&
               additions == other.additions;
    }
};

// Plan file format (see data/nonamcc_plan.json). With `printed` set the
// "printed_added" lists replace "added" where present.
AugmentationPlan parse_plan(const std::string& json_text, bool printed = false);

// The (4,2,2) non-AMCC augmentation of the P11 = P12 = P13 = 1 parity
// system: nine propositions gain 3,1,2,4,3,1,3,5,3 statements. Uses the
// corrected B13 list that reproduces the tabulated one-parameter family.
AugmentationPlan paper_plan();
// Same plan with B13 exactly as printed; its support pins a single model.
AugmentationPlan paper_plan_as_printed();

// Throws InvalidArgument when an addition already satisfies its context's
// parity equation or is out of range.
SupportModel apply_plan(const AugmentationPlan& plan);

struct PlanHit {
    std::uint64_t trial = 0;
    AugmentationPlan plan;
};

struct SearchOptions {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

// Random plans with additions[c].size() == counts[c], drawn per trial from an
// mt19937_64 seeded with splitmix64(seed, trial); keeps plans whose support
// is strongly contextual and possibilistically no-signaling. Hits come back
// in trial order and do not depend on the thread count.
std::vector<PlanHit> search_plans(const ParitySystem& base, const std::vector<std::size_t>& counts,
                                  const SearchOptions& options);

// Per-context addition counts of a plan.
std::vector<std::size_t> addition_counts(const AugmentationPlan& plan);

// constant + coefficient * q for one table cell.
struct AffineEntry {
    Rational constant;
    Rational coefficient;

    bool operator==(const AffineEntry&) const = default;
};

using SymbolicTable = std::vector<std::vector<AffineEntry>>;

// Parses "q", "0", "1/4-q", "2q-1/4", "-q", "1/4+3q", ... Throws ParseError.
AffineEntry parse_affine(const std::string& text);

// CSV with one row per context (setting tuple) and one column per section.
// Throws ParseError on malformed input.
SymbolicTable parse_table_csv(const std::string& csv_text);

// Renders a symbolic table in the same CSV layout parse_table_csv reads.
// Every context must have the same number of sections.
std::string render_table_csv(const MeasurementScenario& scenario, const SymbolicTable& table);
// Only the section columns [begin, end), for printing a wide table in halves.
std::string render_table_csv(const MeasurementScenario& scenario, const SymbolicTable& table, SectionIndex begin,
                             SectionIndex end);

// Symbolic table of a dimension-1 family; throws InvalidArgument otherwise.
SymbolicTable symbolic_table(const AffineFamily& family);

struct TableDiff {
    ContextIndex context = 0;
    SectionIndex section = 0;
    AffineEntry expected;
    AffineEntry actual;
};

struct TableReconstruction {
    AffineFamily family;
    SymbolicTable table;
    std::vector<TableDiff> diffs;

    bool ok() const { return family.dimension() == 1 && diffs.empty(); }
    // Throws VerificationFailure naming the first mismatching cell.
    void verify() const;
};

// plan -> apply_plan -> solve_support, compared cell by cell against the
// transcription. Throws VerificationFailure when the support is infeasible
// or the family is not one-dimensional.
TableReconstruction reconstruct_tables(const AugmentationPlan& plan, const SymbolicTable& expected);
// Uses paper_plan() and the bundled transcription.
TableReconstruction reconstruct_tables();

// Bundled data files.
const std::string& bundled_plan_json();
const std::string& bundled_tables_csv();

} // namespace amcc
