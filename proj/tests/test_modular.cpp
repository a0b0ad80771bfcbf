#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include <univ/modular.hpp>

#include "support.hpp"

using namespace univ;
using namespace univ::modular;
using S = Series<Rational>;

namespace
{

std::int64_t divisor_sum_brute(std::int64_t k)
{
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= k; ++d) {
        if (k % d == 0) {
            s += d;
        }
    }
    return s;
}

// Partitions of n into parts of size at most m.
std::int64_t count_partitions(std::int64_t n, std::int64_t m)
{
    if (n == 0) {
        return 1;
    }
    std::int64_t total = 0;
    for (std::int64_t part = std::min(n, m); part >= 1; --part) {
        total += count_partitions(n - part, part);
    }
    return total;
}

} // namespace

TEST_CASE("sigma1")
{
    CHECK(sigma1(1) == 1);
    CHECK(sigma1(4) == 7);
    CHECK(sigma1(6) == 12);
    for (std::int64_t k = 1; k <= 200; ++k) {
        CHECK(sigma1(k) == divisor_sum_brute(k));
    }
    CHECK_THROWS_AS(sigma1(0), std::domain_error);
}

TEST_CASE("G2 and its derivatives")
{
    CHECK(g2_series(0) == S({Rational(-1, 24)}, 0));
    const auto g2 = g2_series(8);
    CHECK(g2 == S({Rational(-1, 24), 1, 3, 4, 7, 6, 12, 8, 15}, 8));

    const auto dg2 = dg2_series(8);
    CHECK(dg2[0] == 0);
    CHECK(dg2[2] == 6);
    CHECK(dg2 == ps_qderiv(g2));
    CHECK(dg2_series(5) == S({0, 1, 6, 12, 28, 30}, 5));

    const auto d2g2 = d2g2_series(8);
    CHECK(d2g2[3] == 36);
    CHECK(d2g2 == ps_qderiv(dg2));
}

TEST_CASE("delta_series")
{
    const auto delta = delta_series(10);
    CHECK(delta[0] == 0);
    CHECK(delta[1] == 1);
    CHECK(delta[2] == -24);
    CHECK(delta[5] == 4830);

    // Brute-force product of 24 copies of each factor (1 - q^n).
    test::Poly prod{1};
    for (std::size_t n = 1; n <= 9; ++n) {
        test::Poly factor(n + 1);
        factor[0] = 1;
        factor[n] = -1;
        for (int r = 0; r < 24; ++r) {
            prod = test::naive_mul(prod, factor, 9);
        }
    }
    for (std::size_t k = 0; k <= 9; ++k) {
        CHECK(delta[k + 1] == prod[k]);
    }
    CHECK_THROWS_AS(delta_series(0), std::domain_error);
}

TEST_CASE("partition_power_series")
{
    const auto p1 = partition_power_series(1, 20);
    for (std::int64_t n = 0; n <= 20; ++n) {
        CHECK(p1[static_cast<std::size_t>(n)] == count_partitions(n, n));
    }
    CHECK(partition_power_series(1, 5) == S({1, 1, 2, 3, 5, 7}, 5));

    const auto p24 = partition_power_series(24, 12);
    CHECK(p24[0] == 1);
    CHECK(partition_power_series(24, 5) == S({1, 24, 324, 3200, 25650, 176256}, 5));

    // n a_n = e sum_k sigma1(k) a_{n-k} for prod (1 - q^k)^{-e}.
    for (std::size_t n = 1; n <= 12; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += Rational(divisor_sum_brute(static_cast<std::int64_t>(k))) * p24[n - k];
        }
        CHECK(p24[n] * Rational(static_cast<std::int64_t>(n)) == acc * 24);
    }
    for (std::int64_t e : {1, 2, 5, 24}) {
        const auto series = partition_power_series(e, 15);
        for (const auto &c : series.coefficients()) {
            CHECK(c.is_integer());
            CHECK(c.sign() > 0);
        }
    }
    CHECK_THROWS_AS(partition_power_series(0, 5), std::domain_error);
}

TEST_CASE("delta times the 24th partition power is q")
{
    for (std::size_t n : {1U, 5U, 16U}) {
        CHECK(delta_series(n) * partition_power_series(24, n) == S::variable(n));
    }
}

TEST_CASE("catalog caching is transparent")
{
    const ModularCatalog catalog(9);
    CHECK(catalog.order() == 9);
    CHECK(catalog.g2() == g2_series(9));
    CHECK(catalog.dg2() == dg2_series(9));
    CHECK(catalog.d2g2() == d2g2_series(9));
    CHECK(catalog.delta() == delta_series(9));
    CHECK(catalog.partition_power(24) == partition_power_series(24, 9));
    CHECK(catalog.delta() == catalog.delta());

    const ModularCatalog shared(12);
    std::vector<std::thread> threads;
    std::vector<int> ok(8, 0);
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            ok[static_cast<std::size_t>(t)] = shared.delta() == delta_series(12) &&
                                              shared.partition_power(3 + t % 2) == partition_power_series(3 + t % 2, 12);
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    for (int v : ok) {
        CHECK(v == 1);
    }
}
