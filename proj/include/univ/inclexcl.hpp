#pragma once

// Modified cardinalities over the subset lattice of a finite set system.
//
// For a nonempty index set I, |cap_I|* counts the elements of the
// intersection of A_i (i in I) that lie in no strictly finer intersection.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace univ::inclexcl
{

inline constexpr std::size_t default_max_sets = 10;

/// Nonempty index set I as a bitmask: bit i set means A_{i+1} is in I.
using IndexMask = std::uint32_t;

using ElementSet = std::vector<std::int64_t>; // sorted, unique

struct SetSystem
{
    std::vector<ElementSet> sets;
    std::size_t max_sets = default_max_sets;

    SetSystem() = default;
    /// Sorts and deduplicates each set; elements must be nonnegative.
    explicit SetSystem(std::vector<std::vector<std::int64_t>> raw, std::size_t max_sets = default_max_sets);

    [[nodiscard]] std::size_t size() const { return sets.size(); }
};

/// Throws std::invalid_argument for k = 0, k above the bound, or negative
/// elements.
void check_bounds(const SetSystem &sys);

/// 1-based indices contained in a mask.
std::vector<std::size_t> indices_of(IndexMask mask);

/// Intersection of A_i over i in I, for every nonempty I.
std::map<IndexMask, ElementSet> intersection_table(const SetSystem &sys);

struct Cardinalities
{
    std::int64_t plain = 0;    // |cap_I|
    std::int64_t modified = 0; // |cap_I|*
};

using ModifiedCardinalityTable = std::map<IndexMask, Cardinalities>;

/// Backward induction from the full index set down to singletons:
/// |cap_I|* = |cap_I| - sum_{J strictly containing I} |cap_J|*.
ModifiedCardinalityTable modified_cardinalities(const SetSystem &sys);

/// Sum of all modified cardinalities, which is |union A_i|.
std::int64_t union_via_modified(const SetSystem &sys);

/// sum_{I nonempty} (-1)^{|I|+1} |cap_I|.
std::int64_t union_via_alternating(const SetSystem &sys);

} // namespace univ::inclexcl
