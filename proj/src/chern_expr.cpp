#include <univ/chern_expr.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace univ
{

namespace
{

int total_degree(const ChernExpr::Exponent &e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

ChernExpr::ChernExpr(const Rational &c)
{
    add_term({0, 0, 0, 0}, c);
}

ChernExpr ChernExpr::variable(Variable v)
{
    Exponent e{0, 0, 0, 0};
    e[v] = 1;
    return term(e, 1);
}

ChernExpr ChernExpr::term(const Exponent &e, const Rational &c)
{
    ChernExpr out;
    out.add_term(e, c);
    return out;
}

ChernExpr ChernExpr::chi_O()
{
    return (variable(K2) + variable(C2)) * Rational(1, 12);
}

ChernExpr ChernExpr::chi_L()
{
    return chi_O() + (variable(L2) - variable(LK)) * Rational(1, 2);
}

void ChernExpr::add_term(const Exponent &e, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

int ChernExpr::degree() const
{
    int d = -1;
    for (const auto &[e, c] : terms_) {
        d = std::max(d, total_degree(e));
    }
    return d;
}

Rational ChernExpr::coefficient(const Exponent &e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool ChernExpr::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0, 0});
}

bool ChernExpr::is_homogeneous_linear() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return total_degree(t.first) == 1; });
}

Rational ChernExpr::evaluate(const std::array<Rational, 4> &point) const
{
    Rational total;
    for (const auto &[e, c] : terms_) {
        Rational m = c;
        for (std::size_t v = 0; v < 4; ++v) {
            for (int p = 0; p < e[v]; ++p) {
                m *= point[v];
            }
        }
        total += m;
    }
    return total;
}

Rational ChernExpr::evaluate(const chern::SurfaceClass &s) const
{
    return evaluate({Rational(s.L2), Rational(s.LK), Rational(s.K2), Rational(s.c2)});
}

std::string ChernExpr::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
        const int da = total_degree(a.first);
        const int db = total_degree(b.first);
        return da != db ? da > db : a.first > b.first;
    });
    std::string out;
    for (const auto &[e, c] : sorted) {
        std::string monomial;
        for (std::size_t v = 0; v < 4; ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (!monomial.empty()) {
                monomial += '*';
            }
            monomial += variable_names[v];
            if (e[v] > 1) {
                monomial += '^' + std::to_string(e[v]);
            }
        }
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (!out.empty() || negative) {
            out += negative ? '-' : '+';
        }
        if (monomial.empty()) {
            out += magnitude.str();
        } else if (magnitude == Rational(1)) {
            out += monomial;
        } else {
            out += magnitude.str() + '*' + monomial;
        }
    }
    return out;
}

ChernExpr &ChernExpr::operator+=(const ChernExpr &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

ChernExpr &ChernExpr::operator-=(const ChernExpr &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

ChernExpr &ChernExpr::operator*=(const Rational &r)
{
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, c] : terms_) {
        c *= r;
    }
    return *this;
}

ChernExpr operator*(const ChernExpr &a, const ChernExpr &b)
{
    ChernExpr out;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            ChernExpr::Exponent e;
            for (std::size_t v = 0; v < 4; ++v) {
                e[v] = ea[v] + eb[v];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool is_zero(const ChernExpr &e)
{
    return e.empty();
}

bool is_invertible(const ChernExpr &e)
{
    return !e.empty() && e.is_constant();
}

ChernExpr inverse(const ChernExpr &e)
{
    if (!is_invertible(e)) {
        throw std::domain_error("ChernExpr: only nonzero constants are invertible");
    }
    return ChernExpr(e.constant_term().reciprocal());
}

} // namespace univ
