#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include <univ/chern.hpp>
#include <univ/rational.hpp>

namespace univ
{

/// Polynomial with rational coefficients in the four Chern variables
/// (L2, LK, K2, c2), stored sparsely with no zero entries.
class ChernExpr
{
public:
    enum Variable : std::size_t
    {
        L2 = 0,
        LK = 1,
        K2 = 2,
        C2 = 3,
    };
    static constexpr std::array<const char *, 4> variable_names{"L2", "LK", "K2", "c2"};

    using Exponent = std::array<int, 4>;
    using Terms = std::map<Exponent, Rational>;

    ChernExpr() = default;
    ChernExpr(const Rational &c);
    ChernExpr(std::int64_t c) : ChernExpr(Rational(c)) {}
    ChernExpr(int c) : ChernExpr(Rational(c)) {}

    static ChernExpr variable(Variable v);
    static ChernExpr term(const Exponent &e, const Rational &c);

    /// chi(O) = (K2 + c2) / 12.
    static ChernExpr chi_O();
    /// chi(L) = chi(O) + (L2 - LK) / 2.
    static ChernExpr chi_L();

    [[nodiscard]] const Terms &terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const;

    [[nodiscard]] Rational coefficient(const Exponent &e) const;
    [[nodiscard]] Rational constant_term() const { return coefficient({0, 0, 0, 0}); }
    [[nodiscard]] bool is_constant() const;

    /// Every monomial has total degree exactly 1.
    [[nodiscard]] bool is_homogeneous_linear() const;

    [[nodiscard]] Rational evaluate(const std::array<Rational, 4> &point) const;
    [[nodiscard]] Rational evaluate(const chern::SurfaceClass &s) const;

    /// Human-readable form, e.g. "3*L2+2*LK+c2". Terms are ordered by
    /// descending degree, then descending exponent tuple.
    [[nodiscard]] std::string str() const;

    ChernExpr &operator+=(const ChernExpr &o);
    ChernExpr &operator-=(const ChernExpr &o);
    ChernExpr &operator*=(const Rational &r);

    friend ChernExpr operator+(ChernExpr a, const ChernExpr &b) { return a += b; }
    friend ChernExpr operator-(ChernExpr a, const ChernExpr &b) { return a -= b; }
    friend ChernExpr operator*(ChernExpr a, const Rational &r) { return a *= r; }
    friend ChernExpr operator*(const Rational &r, ChernExpr a) { return a *= r; }
    friend ChernExpr operator-(ChernExpr a) { return a *= Rational(-1); }
    friend ChernExpr operator*(const ChernExpr &a, const ChernExpr &b);

    friend bool operator==(const ChernExpr &, const ChernExpr &) = default;

private:
    void add_term(const Exponent &e, const Rational &c);

    Terms terms_;
};

bool is_zero(const ChernExpr &e);
/// Only nonzero constants are units.
bool is_invertible(const ChernExpr &e);
ChernExpr inverse(const ChernExpr &e);

} // namespace univ
