#include <univ/inclexcl.hpp>

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>
#include <string>

namespace univ::inclexcl
{

SetSystem::SetSystem(std::vector<std::vector<std::int64_t>> raw, std::size_t max) : max_sets(max)
{
    sets.reserve(raw.size());
    for (auto &s : raw) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        sets.push_back(std::move(s));
    }
}

void check_bounds(const SetSystem &sys)
{
    if (sys.sets.empty()) {
        throw std::invalid_argument("set system: at least one set is required");
    }
    if (sys.max_sets > 31) {
        throw std::invalid_argument("set system: bound must be at most 31");
    }
    if (sys.sets.size() > sys.max_sets) {
        throw std::invalid_argument("set system: " + std::to_string(sys.sets.size()) + " sets exceed the bound of " +
                                    std::to_string(sys.max_sets));
    }
    for (const auto &s : sys.sets) {
        if (!s.empty() && s.front() < 0) {
            throw std::invalid_argument("set system: elements must be nonnegative");
        }
    }
}

std::vector<std::size_t> indices_of(IndexMask mask)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1U) {
            out.push_back(i + 1);
        }
    }
    return out;
}

std::map<IndexMask, ElementSet> intersection_table(const SetSystem &sys)
{
    check_bounds(sys);
    const auto k = static_cast<unsigned>(sys.size());
    const IndexMask full = (IndexMask{1} << k) - 1;
    std::map<IndexMask, ElementSet> table;
    for (IndexMask mask = 1; mask <= full; ++mask) {
        // Peel off the lowest index; the rest is already in the table.
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        const IndexMask rest = mask & (mask - 1);
        if (rest == 0) {
            table.emplace(mask, sys.sets[low]);
            continue;
        }
        const auto &prev = table.at(rest);
        ElementSet out;
        std::set_intersection(prev.begin(), prev.end(), sys.sets[low].begin(), sys.sets[low].end(),
                              std::back_inserter(out));
        table.emplace(mask, std::move(out));
    }
    return table;
}

ModifiedCardinalityTable modified_cardinalities(const SetSystem &sys)
{
    const auto intersections = intersection_table(sys);
    const auto k = static_cast<unsigned>(sys.size());
    const IndexMask full = (IndexMask{1} << k) - 1;

    std::vector<IndexMask> order;
    for (IndexMask mask = 1; mask <= full; ++mask) {
        order.push_back(mask);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](IndexMask a, IndexMask b) { return std::popcount(a) > std::popcount(b); });

    ModifiedCardinalityTable table;
    for (const IndexMask mask : order) {
        const auto plain = static_cast<std::int64_t>(intersections.at(mask).size());
        std::int64_t finer = 0;
        // Proper supersets J of I: I together with a nonempty subset of the complement.
        const IndexMask complement = full & ~mask;
        for (IndexMask extra = complement; extra != 0; extra = (extra - 1) & complement) {
            finer += table.at(mask | extra).modified;
        }
        table.emplace(mask, Cardinalities{plain, plain - finer});
    }
    return table;
}

std::int64_t union_via_modified(const SetSystem &sys)
{
    std::int64_t total = 0;
    for (const auto &[mask, c] : modified_cardinalities(sys)) {
        total += c.modified;
    }
    return total;
}

std::int64_t union_via_alternating(const SetSystem &sys)
{
    std::int64_t total = 0;
    for (const auto &[mask, inter] : intersection_table(sys)) {
        const auto size = static_cast<std::int64_t>(inter.size());
        total += (std::popcount(mask) % 2 == 1) ? size : -size;
    }
    return total;
}

} // namespace univ::inclexcl
