#pragma once

// Exact q-expansions of the quasi-modular Eisenstein series G2, its
// q-derivatives, the discriminant cusp form and partition-type products.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>

#include <univ/qseries.hpp>
#include <univ/rational.hpp>

namespace univ::modular
{

/// Sum of the positive divisors of k; k >= 1.
std::int64_t sigma1(std::int64_t k);

/// G2 = -1/24 + sum_{k>=1} sigma1(k) q^k.
Series<Rational> g2_series(std::size_t order);

/// D G2 = sum k sigma1(k) q^k.
Series<Rational> dg2_series(std::size_t order);

/// D^2 G2 = sum k^2 sigma1(k) q^k.
Series<Rational> d2g2_series(std::size_t order);

/// Delta = q prod_{n>=1} (1 - q^n)^24; requires order >= 1.
Series<Rational> delta_series(std::size_t order);

/// prod_{k>=1} (1 - q^k)^{-e}; e >= 1.
Series<Rational> partition_power_series(std::int64_t e, std::size_t order);

/// prod_{k>=1} (1 - q^k)^{e} for any integer e (negative e gives the
/// partition-type products).
Series<Rational> euler_product_power(std::int64_t e, std::size_t order);

/// Memoized expansions at a fixed order. Safe to share between threads;
/// cached values are identical to a fresh computation.
class ModularCatalog
{
public:
    explicit ModularCatalog(std::size_t order) : order_(order) {}

    [[nodiscard]] std::size_t order() const { return order_; }

    Series<Rational> g2() const;
    Series<Rational> dg2() const;
    Series<Rational> d2g2() const;
    Series<Rational> delta() const;
    Series<Rational> partition_power(std::int64_t e) const;

private:
    template <typename F>
    Series<Rational> cached(const std::string &key, F &&compute) const;

    std::size_t order_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, Series<Rational>> cache_;
};

} // namespace univ::modular
