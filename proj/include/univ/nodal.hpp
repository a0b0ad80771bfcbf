#pragma once

// Node polynomials T_delta and the generating-function identities they
// satisfy.
//
// The closed form
//
//   H(q) = (DG2/q)^chi(L) B1^K2 B2^LK / (Delta D^2G2 / q^2)^(chi(O)/2)
//
// equals F(DG2(q)) where F(t) = sum_delta T_delta t^delta. Inverting the
// substitution t = DG2(q) by series reversion yields the T_delta.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <univ/chern.hpp>
#include <univ/chern_expr.hpp>
#include <univ/qseries.hpp>
#include <univ/rational.hpp>

namespace univ::nodal
{

/// B1 and B2 are only known through q^5, which caps every delta here.
inline constexpr std::size_t max_supported_order = 5;

/// Thrown when a computation would need B-series coefficients beyond q^5.
class DataExhausted : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

Series<Rational> b1_series(std::size_t order = max_supported_order);
Series<Rational> b2_series(std::size_t order = max_supported_order);

/// The four bases, each normalized to constant term 1, at the given order.
struct ClosedFormBases
{
    Series<Rational> dg2_over_q;         // DG2 / q
    Series<Rational> delta_d2g2_over_q2; // Delta * D^2G2 / q^2
    Series<Rational> b1;
    Series<Rational> b2;
};

ClosedFormBases closed_form_bases(std::size_t order);

/// H_S(q) for a concrete surface, to order N <= 5.
Series<Rational> closed_form_series(const chern::SurfaceClass &s, std::size_t order = max_supported_order);

/// H(q) with coefficients polynomial in (L2, LK, K2, c2).
Series<ChernExpr> closed_form_symbolic(std::size_t order = max_supported_order);

/// Substitutes a surface's Chern numbers into every coefficient.
Series<Rational> specialize(const Series<ChernExpr> &s, const chern::SurfaceClass &surface);

struct NodePolynomialTable
{
    std::size_t max_delta = 0;
    std::vector<ChernExpr> entries; // entries[delta] = T_delta

    [[nodiscard]] const ChernExpr &operator[](std::size_t delta) const { return entries.at(delta); }

    /// F(t) = sum T_delta t^delta as a series of order max_delta.
    [[nodiscard]] Series<ChernExpr> generating_function() const { return Series<ChernExpr>(entries); }
};

/// T_0..T_max_delta from F = H o reversion(DG2).
NodePolynomialTable node_polynomials(std::size_t max_delta = max_supported_order);

/// Shared read-only table computed once at the maximal order.
const NodePolynomialTable &default_table();

enum class Validity
{
    in_range,
    outside_guaranteed_range,
    range_unknown,
};

std::string to_string(Validity v);

/// P2(d) is in range when d >= 5 delta - 1; K3 and T4 always; others unknown.
Validity validity_for(const chern::SurfaceClass &s, std::size_t delta);

struct NodalCount
{
    Rational value;
    Validity validity = Validity::range_unknown;
};

NodalCount count_nodal(const chern::SurfaceClass &s, std::size_t delta);

struct YauZaslowRow
{
    std::size_t delta = 0;
    Rational node_polynomial_value; // T_delta(2 delta - 2, 0, 0, 24)
    Rational partition_coefficient; // [q^delta] prod (1 - q^k)^-24

    [[nodiscard]] bool equal() const { return node_polynomial_value == partition_coefficient; }
};

struct YauZaslowReport
{
    std::vector<YauZaslowRow> rows;

    [[nodiscard]] bool all_equal() const;
};

YauZaslowReport yau_zaslow_check(std::size_t max_delta = max_supported_order);

struct BlowupReport
{
    chern::SurfaceClass surface;
    chern::SurfaceClass blown_up;
    Series<Rational> lhs; // H_blowup(S) * B1 * (DG2/q)
    Series<Rational> rhs; // H_S * B2

    [[nodiscard]] bool holds() const { return lhs == rhs; }
};

BlowupReport blowup_identity_check(const chern::SurfaceClass &s, std::size_t order = max_supported_order);

/// Thrown when some coefficient of log F is not homogeneous linear.
class NotFactorizable : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// log F = K2 log A1 + c2 log A2 + L2 log A3 + LK log A4.
struct FactorizedLogs
{
    Series<Rational> log_A1; // attached to K2
    Series<Rational> log_A2; // attached to c2
    Series<Rational> log_A3; // attached to L2
    Series<Rational> log_A4; // attached to LK
    Series<ChernExpr> log_F;

    /// exp(K2 log A1 + c2 log A2 + L2 log A3 + LK log A4).
    [[nodiscard]] Series<ChernExpr> reassemble() const;
};

FactorizedLogs factorize_generating_function(std::size_t max_delta = max_supported_order);

} // namespace univ::nodal
