#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace univ
{

using BigInt = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// A thin value wrapper over a canonicalized GMP rational. Every constructor
/// and arithmetic operation leaves the value canonical, so equality of two
/// Rationals is equality of numerator and denominator.
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(static_cast<long>(n)) {}
    Rational(int n) : value_(static_cast<long>(n)) {}
    explicit Rational(const BigInt &n) : value_(n) {}
    Rational(const BigInt &num, const BigInt &den);
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "n" or "n/d" (optional leading '-', no whitespace).
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Throws std::domain_error when the value is not an integer or does not
    /// fit in 64 bits.
    [[nodiscard]] std::int64_t to_int64() const;

    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] Rational reciprocal() const;

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

    [[nodiscard]] const mpq_class &raw() const { return value_; }

private:
    mpq_class value_;
};

// Coefficient-ring hooks (see qseries.hpp).
inline bool is_zero(const Rational &r) { return r.is_zero(); }
inline bool is_invertible(const Rational &r) { return !r.is_zero(); }
inline Rational inverse(const Rational &r) { return r.reciprocal(); }

} // namespace univ
