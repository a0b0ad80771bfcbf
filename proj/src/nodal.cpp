#include <univ/nodal.hpp>

#include <algorithm>

#include <univ/modular.hpp>

namespace univ::nodal
{

namespace
{

using chern::SurfaceClass;

void check_order(std::size_t order, const char *what)
{
    if (order > max_supported_order) {
        throw DataExhausted(std::string(what) + ": order " + std::to_string(order) +
                            " exceeds 5, the last known coefficient of the B1/B2 series");
    }
}

Series<Rational> b_series(const std::array<std::int64_t, 6> &coeffs, std::size_t order, const char *what)
{
    check_order(order, what);
    std::vector<Rational> c(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(order) + 1);
    return Series<Rational>(std::move(c));
}

} // namespace

Series<Rational> b1_series(std::size_t order)
{
    return b_series({1, -1, -5, 39, -345, 2961}, order, "b1_series");
}

Series<Rational> b2_series(std::size_t order)
{
    return b_series({1, 5, 2, 35, -140, 986}, order, "b2_series");
}

ClosedFormBases closed_form_bases(std::size_t order)
{
    check_order(order, "closed_form_bases");
    auto dg2_over_q = ps_shift_down(modular::dg2_series(order + 1), 1);
    auto delta_d2g2 = ps_shift_down(modular::delta_series(order + 2) * modular::d2g2_series(order + 2), 2);
    return {std::move(dg2_over_q), std::move(delta_d2g2), b1_series(order), b2_series(order)};
}

Series<Rational> closed_form_series(const SurfaceClass &s, std::size_t order)
{
    check_order(order, "closed_form_series");
    chern::validate(s);
    const auto bases = closed_form_bases(order);
    const Rational half_chi_O = chern::chi_O(s) * Rational(1, 2);
    return ps_pow_expr(bases.dg2_over_q, Rational(chern::chi_L(s))) * ps_pow_expr(bases.b1, Rational(s.K2)) *
           ps_pow_expr(bases.b2, Rational(s.LK)) * ps_pow_expr(bases.delta_d2g2_over_q2, -half_chi_O);
}

Series<ChernExpr> closed_form_symbolic(std::size_t order)
{
    check_order(order, "closed_form_symbolic");
    const auto bases = closed_form_bases(order);
    const ChernExpr half_chi_O = ChernExpr::chi_O() * Rational(1, 2);
    return ps_pow_expr(bases.dg2_over_q, ChernExpr::chi_L()) *
           ps_pow_expr(bases.b1, ChernExpr::variable(ChernExpr::K2)) *
           ps_pow_expr(bases.b2, ChernExpr::variable(ChernExpr::LK)) *
           ps_pow_expr(bases.delta_d2g2_over_q2, -half_chi_O);
}

Series<Rational> specialize(const Series<ChernExpr> &s, const SurfaceClass &surface)
{
    std::vector<Rational> out;
    out.reserve(s.order() + 1);
    for (const auto &c : s.coefficients()) {
        out.push_back(c.evaluate(surface));
    }
    return Series<Rational>(std::move(out));
}

NodePolynomialTable node_polynomials(std::size_t max_delta)
{
    check_order(max_delta, "node_polynomials");
    const auto H = closed_form_symbolic(max_delta);
    const auto inverse_substitution = ps_reversion(modular::dg2_series(max_delta));
    const auto F = ps_compose(H, lift<ChernExpr>(inverse_substitution));
    return {max_delta, F.coefficients()};
}

const NodePolynomialTable &default_table()
{
    static const NodePolynomialTable table = node_polynomials(max_supported_order);
    return table;
}

std::string to_string(Validity v)
{
    switch (v) {
    case Validity::in_range:
        return "in range";
    case Validity::outside_guaranteed_range:
        return "outside guaranteed range";
    case Validity::range_unknown:
        return "range unknown";
    }
    return "range unknown";
}

Validity validity_for(const SurfaceClass &s, std::size_t delta)
{
    switch (s.family) {
    case chern::SurfaceFamily::projective_plane:
        return s.parameter >= 5 * static_cast<std::int64_t>(delta) - 1 ? Validity::in_range
                                                                       : Validity::outside_guaranteed_range;
    case chern::SurfaceFamily::k3:
    case chern::SurfaceFamily::abelian:
        return Validity::in_range;
    default:
        return Validity::range_unknown;
    }
}

NodalCount count_nodal(const SurfaceClass &s, std::size_t delta)
{
    check_order(delta, "count_nodal");
    chern::validate(s);
    return {default_table()[delta].evaluate(s), validity_for(s, delta)};
}

bool YauZaslowReport::all_equal() const
{
    return std::all_of(rows.begin(), rows.end(), [](const YauZaslowRow &r) { return r.equal(); });
}

YauZaslowReport yau_zaslow_check(std::size_t max_delta)
{
    check_order(max_delta, "yau_zaslow_check");
    const auto &table = max_delta == max_supported_order ? default_table() : node_polynomials(max_delta);
    const auto partitions = modular::partition_power_series(24, max_delta);
    YauZaslowReport report;
    for (std::size_t delta = 0; delta <= max_delta; ++delta) {
        const auto surface = chern::k3(2 * static_cast<std::int64_t>(delta) - 2);
        report.rows.push_back({delta, table[delta].evaluate(surface), partitions[delta]});
    }
    return report;
}

BlowupReport blowup_identity_check(const SurfaceClass &s, std::size_t order)
{
    check_order(order, "blowup_identity_check");
    const auto blown_up = chern::blowup(s);
    const auto bases = closed_form_bases(order);
    auto lhs = closed_form_series(blown_up, order) * bases.b1 * bases.dg2_over_q;
    auto rhs = closed_form_series(s, order) * bases.b2;
    return {s, blown_up, std::move(lhs), std::move(rhs)};
}

Series<ChernExpr> FactorizedLogs::reassemble() const
{
    using V = ChernExpr;
    const auto exponent = lift<ChernExpr>(log_A1).scaled(V::variable(V::K2)) +
                          lift<ChernExpr>(log_A2).scaled(V::variable(V::C2)) +
                          lift<ChernExpr>(log_A3).scaled(V::variable(V::L2)) +
                          lift<ChernExpr>(log_A4).scaled(V::variable(V::LK));
    return ps_exp(exponent);
}

FactorizedLogs factorize_generating_function(std::size_t max_delta)
{
    check_order(max_delta, "factorize_generating_function");
    const auto &table = max_delta == max_supported_order ? default_table() : node_polynomials(max_delta);
    auto log_F = ps_log(table.generating_function());

    const std::size_t n = log_F.order();
    std::array<std::vector<Rational>, 4> parts;
    for (auto &p : parts) {
        p.assign(n + 1, Rational(0));
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const auto &c = log_F[k];
        if (!c.is_homogeneous_linear()) {
            throw NotFactorizable("log F: coefficient of t^" + std::to_string(k) + " is not homogeneous linear: " +
                                  c.str());
        }
        for (std::size_t v = 0; v < 4; ++v) {
            ChernExpr::Exponent e{0, 0, 0, 0};
            e[v] = 1;
            parts[v][k] = c.coefficient(e);
        }
    }
    return {
        Series<Rational>(std::move(parts[ChernExpr::K2])),
        Series<Rational>(std::move(parts[ChernExpr::C2])),
        Series<Rational>(std::move(parts[ChernExpr::L2])),
        Series<Rational>(std::move(parts[ChernExpr::LK])),
        std::move(log_F),
    };
}

} // namespace univ::nodal
