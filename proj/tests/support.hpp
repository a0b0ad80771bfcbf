#pragma once

// Random generators and brute-force oracles shared by the test binaries. The
// oracles work on plain coefficient vectors and never call the Series
// algorithms they are used to check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <univ/chern.hpp>
#include <univ/qseries.hpp>
#include <univ/rational.hpp>

namespace univ::test
{

using Rng = std::mt19937_64;
using Poly = std::vector<Rational>;

inline Rational random_rational(Rng &rng, std::int64_t max_num = 5, std::int64_t max_den = 4)
{
    std::uniform_int_distribution<std::int64_t> num(-max_num, max_num);
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    return Rational(num(rng), den(rng));
}

/// Random series of the given order; c0 and c1 are forced when provided.
inline Series<Rational> random_series(Rng &rng, std::size_t order, const Rational *c0 = nullptr,
                                      const Rational *c1 = nullptr)
{
    std::vector<Rational> c(order + 1);
    for (auto &x : c) {
        x = random_rational(rng);
    }
    if (c0) {
        c[0] = *c0;
    }
    if (c1 && order >= 1) {
        c[1] = *c1;
    }
    return Series<Rational>(std::move(c));
}

/// Schoolbook product truncated to `order`.
inline Poly naive_mul(const Poly &a, const Poly &b, std::size_t order)
{
    Poly out(order + 1);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// sum_k outer_k inner^k with explicit powers of inner.
inline Poly naive_compose(const Poly &outer, const Poly &inner, std::size_t order)
{
    Poly out(order + 1);
    Poly power(order + 1);
    power[0] = 1;
    for (std::size_t k = 0; k < outer.size() && k <= order; ++k) {
        for (std::size_t j = 0; j <= order; ++j) {
            out[j] += outer[k] * power[j];
        }
        power = naive_mul(power, inner, order);
    }
    return out;
}

inline Poly coefficients(const Series<Rational> &s)
{
    return s.coefficients();
}

/// Random surface satisfying both integrality invariants.
inline chern::SurfaceClass random_surface(Rng &rng)
{
    std::uniform_int_distribution<std::int64_t> small(-12, 12);
    const std::int64_t K2 = small(rng);
    // c2 = -K2 mod 12, shifted into a modest range.
    std::int64_t c2 = ((-K2 % 12) + 12) % 12 + 12 * std::uniform_int_distribution<std::int64_t>(-1, 3)(rng);
    const std::int64_t LK = small(rng);
    std::int64_t L2 = small(rng);
    if ((L2 - LK) % 2 != 0) {
        ++L2;
    }
    return chern::make_surface("random", L2, LK, K2, c2);
}

} // namespace univ::test
