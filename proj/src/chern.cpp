#include <univ/chern.hpp>

#include <charconv>
#include <stdexcept>
#include <utility>

namespace univ::chern
{

namespace
{

std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t parse_int(std::string_view text, std::string_view spec)
{
    std::int64_t value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("surface spec '" + std::string(spec) + "': '" + std::string(text) +
                                    "' is not an integer");
    }
    return value;
}

} // namespace

void validate(const SurfaceClass &s)
{
    if (floor_mod(s.K2 + s.c2, 12) != 0) {
        throw std::invalid_argument("surface " + s.name + ": K2 + c2 = " + std::to_string(s.K2 + s.c2) +
                                    " is not divisible by 12 (Noether integrality)");
    }
    if (floor_mod(s.L2 - s.LK, 2) != 0) {
        throw std::invalid_argument("surface " + s.name + ": L2 - LK = " + std::to_string(s.L2 - s.LK) +
                                    " is odd, so chi(L) is not an integer");
    }
}

bool is_valid(const SurfaceClass &s)
{
    return floor_mod(s.K2 + s.c2, 12) == 0 && floor_mod(s.L2 - s.LK, 2) == 0;
}

SurfaceClass make_surface(std::string name, std::int64_t L2, std::int64_t LK, std::int64_t K2, std::int64_t c2)
{
    SurfaceClass s{std::move(name), L2, LK, K2, c2, SurfaceFamily::explicit_data, 0};
    validate(s);
    return s;
}

SurfaceClass p2(std::int64_t d)
{
    if (d < 0) {
        throw std::invalid_argument("P2: degree must be nonnegative");
    }
    return {"P2:" + std::to_string(d), d * d, -3 * d, 9, 3, SurfaceFamily::projective_plane, d};
}

SurfaceClass k3(std::int64_t L2)
{
    SurfaceClass s{"K3:" + std::to_string(L2), L2, 0, 0, 24, SurfaceFamily::k3, L2};
    validate(s);
    return s;
}

SurfaceClass t4(std::int64_t L2)
{
    SurfaceClass s{"T4:" + std::to_string(L2), L2, 0, 0, 0, SurfaceFamily::abelian, L2};
    validate(s);
    return s;
}

std::vector<CatalogConstructor> builtin_catalog()
{
    return {
        {"P2", &p2, "degree d of H^d"},
        {"K3", &k3, "self-intersection L2 (even)"},
        {"T4", &t4, "self-intersection L2 (even)"},
    };
}

SurfaceClass parse_surface(std::string_view spec)
{
    if (const auto colon = spec.find(':'); colon != std::string_view::npos) {
        const auto name = spec.substr(0, colon);
        const auto param = parse_int(spec.substr(colon + 1), spec);
        for (const auto &entry : builtin_catalog()) {
            if (entry.name == name) {
                return entry.make(param);
            }
        }
        throw std::invalid_argument("surface spec '" + std::string(spec) + "': unknown surface '" + std::string(name) +
                                    "' (expected P2, K3 or T4)");
    }
    std::array<std::int64_t, 4> values{};
    std::size_t count = 0;
    std::string_view rest = spec;
    while (true) {
        const auto comma = rest.find(',');
        if (count == values.size()) {
            throw std::invalid_argument("surface spec '" + std::string(spec) + "': expected four values L2,LK,K2,c2");
        }
        values[count++] = parse_int(rest.substr(0, comma), spec);
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    if (count != values.size()) {
        throw std::invalid_argument("surface spec '" + std::string(spec) + "': expected four values L2,LK,K2,c2");
    }
    return make_surface(std::string(spec), values[0], values[1], values[2], values[3]);
}

std::vector<SurfaceClass> catalog_sample()
{
    std::vector<SurfaceClass> out;
    for (std::int64_t d = 0; d <= 12; ++d) {
        out.push_back(p2(d));
    }
    for (std::int64_t L2 = -2; L2 <= 20; L2 += 2) {
        out.push_back(k3(L2));
    }
    for (std::int64_t L2 = 0; L2 <= 20; L2 += 2) {
        out.push_back(t4(L2));
    }
    return out;
}

Rational chi_O(const SurfaceClass &s)
{
    return Rational(s.K2 + s.c2, 12);
}

std::int64_t chi_L(const SurfaceClass &s)
{
    if (floor_mod(s.L2 - s.LK, 2) != 0) {
        throw std::invalid_argument("chi_L: L2 - LK is odd for surface " + s.name);
    }
    return (chi_O(s) + Rational((s.L2 - s.LK) / 2)).to_int64();
}

std::int64_t dim_linear_system(const SurfaceClass &s)
{
    return chi_L(s) - 1;
}

SurfaceClass blowup(const SurfaceClass &s)
{
    return {"Bl(" + s.name + ")", s.L2 - 1, s.LK + 1, s.K2 - 1, s.c2 + 1, SurfaceFamily::blown_up, 0};
}

std::array<Rational, 4> anticanonical_row(const SurfaceClass &s)
{
    return {Rational(s.K2), Rational(s.c2), Rational(-s.LK), Rational(s.L2)};
}

RRCoefficients solve_rr_coefficients(std::span<const CatalogEntry, 4> catalog)
{
    // Gauss-Jordan elimination on the augmented matrix [rows | chi].
    std::array<std::array<Rational, 5>, 4> m;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto row = anticanonical_row(catalog[i].surface);
        for (std::size_t j = 0; j < 4; ++j) {
            m[i][j] = row[j];
        }
        m[i][4] = catalog[i].chi;
    }
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        while (pivot < 4 && m[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == 4) {
            throw std::domain_error("solve_rr_coefficients: the catalog gives a singular system");
        }
        std::swap(m[col], m[pivot]);
        const Rational inv = m[col][col].reciprocal();
        for (auto &x : m[col]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col || m[r][col].is_zero()) {
                continue;
            }
            const Rational f = m[r][col];
            for (std::size_t j = 0; j < 5; ++j) {
                m[r][j] -= f * m[col][j];
            }
        }
    }
    return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

std::array<CatalogEntry, 4> identification_catalog()
{
    return {{
        {k3(0), *known_euler_characteristic(k3(0))},
        {p2(0), *known_euler_characteristic(p2(0))},
        {p2(1), *known_euler_characteristic(p2(1))},
        {t4(2), *known_euler_characteristic(t4(2))},
    }};
}

std::optional<Rational> known_euler_characteristic(const SurfaceClass &s)
{
    switch (s.family) {
    case SurfaceFamily::projective_plane:
        // Monomials of degree d in three variables.
        return Rational((s.parameter + 1) * (s.parameter + 2), 2);
    case SurfaceFamily::k3:
        // h0 = L2/2 + 2, h1 = h2 = 0 for ample L; h0 = h2 = 1 for L = O.
        if (s.parameter >= 0) {
            return Rational(s.parameter / 2 + 2);
        }
        return std::nullopt;
    case SurfaceFamily::abelian:
        if (s.parameter > 0) {
            return Rational(s.parameter / 2);
        }
        if (s.parameter == 0) {
            return Rational(0); // 1 - 2 + 1
        }
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

Rational evaluate(const RRCoefficients &c, const SurfaceClass &s)
{
    const auto row = anticanonical_row(s);
    return c.A1 * row[0] + c.A2 * row[1] + c.A3 * row[2] + c.A4 * row[3];
}

} // namespace univ::chern
