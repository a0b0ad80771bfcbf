#pragma once

// Chern-number bookkeeping for polarized surfaces (M, L).
//
// Data is stored in the canonical-class basis: L2 = c1(L)^2,
// LK = c1(L).c1(K_M), K2 = c1(K_M)^2, c2 = c2(M). Since c1(M) = -c1(K_M),
// c1(M).c1(L) = -LK and c1(M)^2 = K2.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <univ/rational.hpp>

namespace univ::chern
{

enum class SurfaceFamily
{
    projective_plane, // (P^2, H^d), parameter d
    k3,               // K3 with c1(L)^2 = parameter
    abelian,          // T^4 with c1(L)^2 = parameter
    explicit_data,    // raw Chern numbers
    blown_up,         // image of blowup()
};

struct SurfaceClass
{
    std::string name;
    std::int64_t L2 = 0;
    std::int64_t LK = 0;
    std::int64_t K2 = 0;
    std::int64_t c2 = 0;
    SurfaceFamily family = SurfaceFamily::explicit_data;
    std::int64_t parameter = 0;

    friend bool operator==(const SurfaceClass &, const SurfaceClass &) = default;
};

/// Builds an explicit surface and checks its invariants.
SurfaceClass make_surface(std::string name, std::int64_t L2, std::int64_t LK, std::int64_t K2, std::int64_t c2);

/// Throws std::invalid_argument unless K2 + c2 = 0 mod 12 (Noether) and
/// L2 - LK is even.
void validate(const SurfaceClass &s);

[[nodiscard]] bool is_valid(const SurfaceClass &s);

// Catalog constructors.
SurfaceClass p2(std::int64_t d);
SurfaceClass k3(std::int64_t L2);
SurfaceClass t4(std::int64_t L2);

/// Named constructor entry for lookup by name, e.g. "P2" -> p2.
struct CatalogConstructor
{
    std::string name;
    SurfaceClass (*make)(std::int64_t);
    std::string parameter_meaning;
};

/// Constructors for P2(d), K3(L2) and T4(L2). The O-polarized surfaces are
/// P2(0), K3(0) and T4(0).
std::vector<CatalogConstructor> builtin_catalog();

/// Parses "P2:3", "K3:4", "T4:2" or explicit "L2,LK,K2,c2". The result is
/// validated.
SurfaceClass parse_surface(std::string_view spec);

/// Finite sample of catalog surfaces used for exhaustive property checks:
/// P2(0..12), K3(L2) for L2 = -2..20 even, T4(L2) for L2 = 0..20 even.
std::vector<SurfaceClass> catalog_sample();

/// Holomorphic Euler characteristic of O_M, (K2 + c2) / 12.
Rational chi_O(const SurfaceClass &s);

/// chi(O) + (L2 - LK) / 2; throws on a parity violation.
std::int64_t chi_L(const SurfaceClass &s);

/// Expected dimension chi(L) - 1 of the linear system |L|.
std::int64_t dim_linear_system(const SurfaceClass &s);

/// One-point blowup with the polarization pulled back minus the exceptional
/// divisor: (L2 - 1, LK + 1, K2 - 1, c2 + 1).
SurfaceClass blowup(const SurfaceClass &s);

/// Coefficients of chi(L) = A1 c1(M)^2 + A2 c2(M) + A3 c1(M).c1(L) + A4 c1(L)^2.
struct RRCoefficients
{
    Rational A1, A2, A3, A4;

    friend bool operator==(const RRCoefficients &, const RRCoefficients &) = default;
};

struct CatalogEntry
{
    SurfaceClass surface;
    Rational chi; // known Euler characteristic of L
};

/// Row (c1(M)^2, c2, c1(M).c1(L), c1(L)^2) of the identification system.
std::array<Rational, 4> anticanonical_row(const SurfaceClass &s);

/// Solves the 4x4 system exactly; throws std::domain_error if singular.
RRCoefficients solve_rr_coefficients(std::span<const CatalogEntry, 4> catalog);

/// The identification catalog K3/O, P2/O, (P2, H), (T4, L2 = 2), with chi
/// taken from known cohomology rather than from Riemann-Roch.
std::array<CatalogEntry, 4> identification_catalog();

/// chi from cohomology where it is classically known: (d+1)(d+2)/2 sections
/// of H^d on P2 (d >= 0), L2/2 + 2 on K3 (L2 >= 0), L2/2 on T4 (L2 > 0), and
/// 0 for T4/O. Empty for anything else.
std::optional<Rational> known_euler_characteristic(const SurfaceClass &s);

/// A1 c1(M)^2 + A2 c2 + A3 c1(M).c1(L) + A4 c1(L)^2.
Rational evaluate(const RRCoefficients &coefficients, const SurfaceClass &s);

} // namespace univ::chern
