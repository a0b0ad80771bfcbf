#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include <univ/inclexcl.hpp>

namespace univ::test
{

/// Groups the union's elements by the exact set of indices containing them.
/// The class of signature I has size |cap_I|*.
inline std::map<inclexcl::IndexMask, std::int64_t> signature_classes(const inclexcl::SetSystem &sys)
{
    std::map<std::int64_t, inclexcl::IndexMask> signature;
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
        for (auto x : sys.sets[i]) {
            signature[x] |= inclexcl::IndexMask{1} << i;
        }
    }
    std::map<inclexcl::IndexMask, std::int64_t> classes;
    for (const auto &[x, mask] : signature) {
        ++classes[mask];
    }
    return classes;
}

inline std::int64_t direct_union_size(const inclexcl::SetSystem &sys)
{
    std::set<std::int64_t> all;
    for (const auto &s : sys.sets) {
        all.insert(s.begin(), s.end());
    }
    return static_cast<std::int64_t>(all.size());
}

/// k in [1, max_k] sets, each a random subset of {0..universe-1}.
template <typename Rng>
inclexcl::SetSystem random_set_system(Rng &rng, std::size_t max_k, std::int64_t universe)
{
    const std::size_t k = 1 + rng() % max_k;
    std::bernoulli_distribution keep(0.5);
    std::vector<std::vector<std::int64_t>> raw(k);
    for (auto &s : raw) {
        for (std::int64_t x = 0; x < universe; ++x) {
            if (keep(rng)) {
                s.push_back(x);
            }
        }
    }
    return inclexcl::SetSystem(std::move(raw));
}

} // namespace univ::test
