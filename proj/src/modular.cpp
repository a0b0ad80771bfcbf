#include <univ/modular.hpp>

#include <stdexcept>
#include <vector>

namespace univ::modular
{

std::int64_t sigma1(std::int64_t k)
{
    if (k < 1) {
        throw std::domain_error("sigma1: argument must be positive");
    }
    std::int64_t total = 0;
    for (std::int64_t d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            total += d;
            if (d != k / d) {
                total += k / d;
            }
        }
    }
    return total;
}

namespace
{

// sum_{k>=1} k^p sigma1(k) q^k plus the given constant term.
Series<Rational> weighted_divisor_series(std::size_t order, int power, const Rational &constant)
{
    std::vector<Rational> c(order + 1);
    c[0] = constant;
    for (std::size_t k = 1; k <= order; ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        Rational weight = 1;
        for (int p = 0; p < power; ++p) {
            weight *= kk;
        }
        c[k] = weight * sigma1(kk);
    }
    return Series<Rational>(std::move(c));
}

} // namespace

Series<Rational> g2_series(std::size_t order)
{
    return weighted_divisor_series(order, 0, Rational(-1, 24));
}

Series<Rational> dg2_series(std::size_t order)
{
    return weighted_divisor_series(order, 1, 0);
}

Series<Rational> d2g2_series(std::size_t order)
{
    return weighted_divisor_series(order, 2, 0);
}

Series<Rational> euler_product_power(std::int64_t e, std::size_t order)
{
    // Integer arithmetic in place: multiply by (1 - q^k) or divide by it
    // (a strided prefix sum), |e| times for each k <= order.
    std::vector<BigInt> c(order + 1, BigInt(0));
    c[0] = 1;
    const std::int64_t reps = e < 0 ? -e : e;
    for (std::size_t k = 1; k <= order; ++k) {
        for (std::int64_t r = 0; r < reps; ++r) {
            if (e > 0) {
                for (std::size_t n = order; n >= k; --n) {
                    c[n] -= c[n - k];
                }
            } else {
                for (std::size_t n = k; n <= order; ++n) {
                    c[n] += c[n - k];
                }
            }
        }
    }
    std::vector<Rational> out;
    out.reserve(order + 1);
    for (const auto &x : c) {
        out.emplace_back(x);
    }
    return Series<Rational>(std::move(out));
}

Series<Rational> delta_series(std::size_t order)
{
    if (order < 1) {
        throw std::domain_error("delta_series: order must be at least 1");
    }
    const auto prod = euler_product_power(24, order - 1);
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k < order; ++k) {
        c[k + 1] = prod[k];
    }
    return Series<Rational>(std::move(c));
}

Series<Rational> partition_power_series(std::int64_t e, std::size_t order)
{
    if (e < 1) {
        throw std::domain_error("partition_power_series: exponent must be positive");
    }
    return euler_product_power(-e, order);
}

template <typename F>
Series<Rational> ModularCatalog::cached(const std::string &key, F &&compute) const
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
    }
    // Computed outside the lock; a racing thread produces the same value.
    auto value = compute();
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
}

Series<Rational> ModularCatalog::g2() const
{
    return cached("G2", [this] { return g2_series(order_); });
}

Series<Rational> ModularCatalog::dg2() const
{
    return cached("DG2", [this] { return dg2_series(order_); });
}

Series<Rational> ModularCatalog::d2g2() const
{
    return cached("D2G2", [this] { return d2g2_series(order_); });
}

Series<Rational> ModularCatalog::delta() const
{
    return cached("DELTA", [this] { return delta_series(order_); });
}

Series<Rational> ModularCatalog::partition_power(std::int64_t e) const
{
    return cached("PARTITION_POWER(" + std::to_string(e) + ")", [this, e] { return partition_power_series(e, order_); });
}

} // namespace univ::modular
