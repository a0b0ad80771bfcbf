#pragma once

// Truncated formal power series in one variable q over an exact coefficient
// ring. A series of order N stores c_0..c_N and is exact modulo q^{N+1}.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <univ/rational.hpp>

namespace univ
{

/// Coefficient ring contract: zero by default construction, embedding of the
/// rationals, ring operations, scaling by a rational and an invertibility
/// test. Rational and ChernExpr both model it.
template <typename C>
concept CoefficientRing = std::regular<C> && requires(const C &a, const C &b, const Rational &r) {
    C{r};
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a * r } -> std::convertible_to<C>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { is_invertible(a) } -> std::convertible_to<bool>;
    { inverse(a) } -> std::convertible_to<C>;
};

template <CoefficientRing C>
class Series
{
public:
    using coefficient_type = C;

    /// The zero series of order 0.
    Series() : coeffs_(1) {}

    /// Takes ownership of c_0..c_N; the order is coeffs.size() - 1.
    explicit Series(std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("Series: at least one coefficient is required");
        }
    }

    /// Coefficients c_0, c_1, ... padded with zeros up to the given order.
    Series(std::initializer_list<C> init, std::size_t order) : coeffs_(order + 1)
    {
        if (init.size() > order + 1) {
            throw std::invalid_argument("Series: more coefficients than the order allows");
        }
        std::copy(init.begin(), init.end(), coeffs_.begin());
    }

    static Series zero(std::size_t order) { return Series(std::vector<C>(order + 1)); }

    static Series constant(const C &c, std::size_t order)
    {
        auto s = zero(order);
        s.coeffs_[0] = c;
        return s;
    }

    static Series one(std::size_t order) { return constant(C{Rational(1)}, order); }

    /// c * q^k truncated at the given order (zero if k > order).
    static Series monomial(const C &c, std::size_t k, std::size_t order)
    {
        auto s = zero(order);
        if (k <= order) {
            s.coeffs_[k] = c;
        }
        return s;
    }

    /// The series q.
    static Series variable(std::size_t order) { return monomial(C{Rational(1)}, 1, order); }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const C &operator[](std::size_t k) const { return coeffs_.at(k); }
    [[nodiscard]] const std::vector<C> &coefficients() const { return coeffs_; }
    void set(std::size_t k, C value) { coeffs_.at(k) = std::move(value); }

    /// Drops coefficients above `order`. Raising the order is not allowed.
    [[nodiscard]] Series truncate(std::size_t order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("Series: cannot raise the truncation order");
        }
        return Series(std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    [[nodiscard]] bool is_zero_series() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C &c) { return is_zero(c); });
    }

    friend bool operator==(const Series &, const Series &) = default;

    Series &operator+=(const Series &o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] = coeffs_[k] + o.coeffs_[k];
        }
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] = coeffs_[k] - o.coeffs_[k];
        }
        return *this;
    }

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator-(Series a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }

    // Cauchy product, truncated to the smaller order.
    friend Series operator*(const Series &a, const Series &b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<C> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (!is_zero(b.coeffs_[j])) {
                    out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return Series(std::move(out));
    }

    friend Series operator*(Series a, const Rational &r)
    {
        for (auto &c : a.coeffs_) {
            c = c * r;
        }
        return a;
    }
    friend Series operator*(const Rational &r, Series a) { return std::move(a) * r; }

    /// Multiplies every coefficient by a ring element.
    [[nodiscard]] Series scaled(const C &c) const
    {
        Series out = *this;
        for (auto &x : out.coeffs_) {
            x = x * c;
        }
        return out;
    }

private:
    std::vector<C> coeffs_;
};

/// Embeds a rational series into a series over C with the same order.
template <CoefficientRing C>
Series<C> lift(const Series<Rational> &s)
{
    std::vector<C> out;
    out.reserve(s.order() + 1);
    for (const auto &c : s.coefficients()) {
        out.emplace_back(c);
    }
    return Series<C>(std::move(out));
}

template <CoefficientRing C>
Series<C> ps_add(const Series<C> &a, const Series<C> &b)
{
    return a + b;
}

template <CoefficientRing C>
Series<C> ps_mul(const Series<C> &a, const Series<C> &b)
{
    return a * b;
}

/// Multiplicative inverse; requires an invertible constant term.
template <CoefficientRing C>
Series<C> ps_inverse(const Series<C> &a)
{
    if (!is_invertible(a[0])) {
        throw std::domain_error("ps_inverse: constant term is not invertible");
    }
    const std::size_t n = a.order();
    const C inv0 = inverse(a[0]);
    std::vector<C> b(n + 1);
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        C acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            if (!is_zero(a[j])) {
                acc = acc + a[j] * b[k - j];
            }
        }
        b[k] = -(acc * inv0);
    }
    return Series<C>(std::move(b));
}

/// D = q d/dq.
template <CoefficientRing C>
Series<C> ps_qderiv(const Series<C> &a)
{
    std::vector<C> out(a.order() + 1);
    for (std::size_t k = 1; k <= a.order(); ++k) {
        out[k] = a[k] * Rational(static_cast<std::int64_t>(k));
    }
    return Series<C>(std::move(out));
}

/// Divides by q^k. The coefficients of q^0..q^{k-1} must vanish; the result
/// has order N - k.
template <CoefficientRing C>
Series<C> ps_shift_down(const Series<C> &a, std::size_t k)
{
    if (k > a.order()) {
        throw std::domain_error("ps_shift_down: shift exceeds truncation order");
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (!is_zero(a[j])) {
            throw std::domain_error("ps_shift_down: coefficient of q^" + std::to_string(j) + " is nonzero");
        }
    }
    const auto &c = a.coefficients();
    return Series<C>(std::vector<C>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

/// outer(inner(q)) by Horner evaluation; inner must have zero constant term.
template <CoefficientRing C>
Series<C> ps_compose(const Series<C> &outer, const Series<C> &inner)
{
    if (!is_zero(inner[0])) {
        throw std::domain_error("ps_compose: inner series has a nonzero constant term");
    }
    const std::size_t n = std::min(outer.order(), inner.order());
    const Series<C> x = inner.truncate(n);
    auto acc = Series<C>::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * x;
        acc.set(0, acc[0] + outer[k]);
    }
    return acc;
}

/// Compositional inverse b with a(b(q)) = q, solved one coefficient at a
/// time: with b_1..b_{n-1} fixed, the q^n coefficient of a(b) is
/// a_1 b_n plus terms already known.
template <CoefficientRing C>
Series<C> ps_reversion(const Series<C> &a)
{
    if (!is_zero(a[0])) {
        throw std::domain_error("ps_reversion: constant term must be zero");
    }
    const std::size_t n = a.order();
    if (n == 0) {
        return Series<C>::zero(0);
    }
    if (!is_invertible(a[1])) {
        throw std::domain_error("ps_reversion: linear coefficient is not invertible");
    }
    const C inv1 = inverse(a[1]);
    auto b = Series<C>::monomial(inv1, 1, n);
    for (std::size_t k = 2; k <= n; ++k) {
        const auto partial = ps_compose(a.truncate(k), b.truncate(k));
        b.set(k, -(partial[k] * inv1));
    }
    return b;
}

/// Formal logarithm of a series with constant term 1, via D(log a) = Da / a.
template <CoefficientRing C>
Series<C> ps_log(const Series<C> &a)
{
    if (a[0] != C{Rational(1)}) {
        throw std::domain_error("ps_log: constant term must be 1");
    }
    const auto d = ps_qderiv(a) * ps_inverse(a);
    std::vector<C> out(a.order() + 1);
    for (std::size_t k = 1; k <= a.order(); ++k) {
        out[k] = d[k] * Rational(1, static_cast<std::int64_t>(k));
    }
    return Series<C>(std::move(out));
}

/// Formal exponential of a series with zero constant term, from D(exp a) = exp(a) Da.
template <CoefficientRing C>
Series<C> ps_exp(const Series<C> &a)
{
    if (!is_zero(a[0])) {
        throw std::domain_error("ps_exp: constant term must be zero");
    }
    const std::size_t n = a.order();
    const auto da = ps_qderiv(a);
    std::vector<C> b(n + 1);
    b[0] = C{Rational(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        C acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            if (!is_zero(da[j])) {
                acc = acc + da[j] * b[k - j];
            }
        }
        b[k] = acc * Rational(1, static_cast<std::int64_t>(k));
    }
    return Series<C>(std::move(b));
}

/// base^e = exp(e log base) for a rational base with constant term 1 and an
/// exponent in any coefficient ring (a rational, or a symbolic expression).
template <CoefficientRing C>
Series<C> ps_pow_expr(const Series<Rational> &base, const C &e)
{
    if (base[0] != Rational(1)) {
        throw std::domain_error("ps_pow_expr: constant term of the base must be 1");
    }
    return ps_exp(lift<C>(ps_log(base)).scaled(e));
}

template <CoefficientRing C>
Series<C> ps_pow_expr(const Series<Rational> &base, const C &e, std::size_t order)
{
    return ps_pow_expr(base.truncate(order), e);
}

} // namespace univ
