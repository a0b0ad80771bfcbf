#include <univ/rational.hpp>

#include <cctype>
#include <limits>
#include <stdexcept>

namespace univ
{

Rational::Rational(const BigInt &num, const BigInt &den) : value_(num, den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_part = text.substr(0, slash);
    const auto den_part = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num_part) || !is_integer_literal(den_part) || den_part.front() == '-') {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
    return Rational(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
}

std::int64_t Rational::to_int64() const
{
    if (!is_integer()) {
        throw std::domain_error("Rational: " + str() + " is not an integer");
    }
    const BigInt &n = value_.get_num();
    if (!n.fits_slong_p()) {
        throw std::domain_error("Rational: " + str() + " does not fit in 64 bits");
    }
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return n.get_si();
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: reciprocal of zero");
    }
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

} // namespace univ
