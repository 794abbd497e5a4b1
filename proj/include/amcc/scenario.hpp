#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amcc {

using Outcome = std::uint32_t;
using MeasurementIndex = std::size_t;
using ContextIndex = std::size_t;
// Packed section/global-section index: big-endian mixed radix over the
// outcome arities, so for binary outcomes it is the bit string read as an
// unsigned integer with the first measurement as the most significant bit.
using SectionIndex = std::uint64_t;

using Context = std::vector<MeasurementIndex>;

struct BellShape {
    std::size_t parties = 0;
    std::size_t settings = 0;
    std::size_t outcomes = 0;

    bool operator==(const BellShape&) const = default;
};

// Largest global-section space any exhaustive operation will enumerate.
inline constexpr std::uint64_t kMaxGlobalSections = std::uint64_t{1} << 24;

// A measurement scenario <measurements, cover, outcomes>. Immutable once
// built; the constructor validates the cover (it must cover every
// measurement and be an antichain) and sorts it into canonical order.
class MeasurementScenario {
public:
    MeasurementScenario(std::vector<std::string> labels, std::vector<Context> cover, std::vector<Outcome> arities);

    std::size_t measurement_count() const { return labels_.size(); }
    std::size_t context_count() const { return cover_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Context>& cover() const { return cover_; }
    const Context& context(ContextIndex c) const;
    const std::vector<Outcome>& arities() const { return arities_; }
    Outcome arity(MeasurementIndex m) const { return arities_.at(m); }

    bool all_binary() const;

    // Number of sections over context c (product of arities).
    std::uint64_t section_count(ContextIndex c) const { return section_counts_.at(c); }
    // Offset of context c's block in the stacked (context, section) vector.
    std::size_t row_offset(ContextIndex c) const { return row_offsets_.at(c); }
    // Total number of (context, section) slots.
    std::size_t slot_count() const { return row_offsets_.back(); }

    // Product of all arities; throws ResourceLimit when it exceeds
    // kMaxGlobalSections.
    std::uint64_t global_count() const;

    // Set for scenarios built by bell_scenario() (or parsed from the Bell
    // JSON form).
    const std::optional<BellShape>& bell_shape() const { return bell_; }

    // Index of the context with the given sorted measurement set.
    std::optional<ContextIndex> find_context(const Context& measurements) const;

    bool operator==(const MeasurementScenario& other) const;

private:
    friend MeasurementScenario bell_scenario(std::size_t, std::size_t, std::size_t);

    std::vector<std::string> labels_;
    std::vector<Context> cover_;
    std::vector<Outcome> arities_;
    std::vector<std::uint64_t> section_counts_;
    std::vector<std::size_t> row_offsets_;
    std::optional<BellShape> bell_;
};

struct Section {
    ContextIndex context = 0;
    std::vector<Outcome> assignment;

    bool operator==(const Section&) const = default;
};

struct GlobalSection {
    std::vector<Outcome> assignment;

    bool operator==(const GlobalSection&) const = default;
};

// (n, m, o) Bell scenario. Measurement p*m + x is setting x of party p;
// contexts are ordered lexicographically by their setting tuple, so context
// index = big-endian base-m reading of the tuple.
MeasurementScenario bell_scenario(std::size_t parties, std::size_t settings_per_party, std::size_t outcomes);

// Setting tuple of a Bell-scenario context (one setting per party).
std::vector<std::size_t> setting_tuple(const MeasurementScenario& scenario, ContextIndex c);

std::vector<GlobalSection> enumerate_global_sections(const MeasurementScenario& scenario);

SectionIndex section_index(const MeasurementScenario& scenario, const Section& section);
Section section_at(const MeasurementScenario& scenario, ContextIndex c, SectionIndex index);
SectionIndex global_index(const MeasurementScenario& scenario, const GlobalSection& global);
GlobalSection global_at(const MeasurementScenario& scenario, SectionIndex index);

Section restrict(const MeasurementScenario& scenario, const GlobalSection& global, ContextIndex c);

// Restricts an assignment over the sorted measurement set `from` to the
// sorted subset `onto`. Throws InvalidArgument when `onto` is not a subset.
std::vector<Outcome> project(const std::vector<MeasurementIndex>& from, const std::vector<Outcome>& values,
                             const std::vector<MeasurementIndex>& onto);

// Sorted intersection of two contexts.
Context intersect(const Context& a, const Context& b);

// Precomputed global-index -> section-index table for every context.
class RestrictionMap {
public:
    explicit RestrictionMap(const MeasurementScenario& scenario);

    SectionIndex section_of(SectionIndex global, ContextIndex c) const {
        return table_[c * globals_ + global];
    }
    std::uint64_t global_count() const { return globals_; }
    std::size_t context_count() const { return contexts_; }

private:
    std::uint64_t globals_ = 0;
    std::size_t contexts_ = 0;
    std::vector<SectionIndex> table_;
};

// 0/1 matrix with one row per (context, section) slot and one column per
// global section, both in canonical order.
class IncidenceMatrix {
public:
    IncidenceMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint8_t v) { entries_[r * cols_ + c] = v; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> entries_;
};

IncidenceMatrix incidence_matrix(const MeasurementScenario& scenario);

} // namespace amcc
