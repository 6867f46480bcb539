#pragma once

// Dedekind zeta numerics for the cubic field attached to a monic integral
// cubic with squarefree discriminant.  Local data comes from the splitting
// of the cubic modulo each prime; global values are computed along two
// independent routes (Euler product, Dirichlet series of ideal counts) so
// each can check the other.  On top of that sit the completed zeta with its
// Gamma factors, its residue, and the derived volume constants.

#include <cstdint>
#include <string>
#include <vector>

#include "triherm/errors.hpp"
#include "triherm/rat.hpp"

namespace triherm {

// monic integral cubic t^3 + c2 t^2 + c1 t + c0
struct IntegerCubic {
    std::int64_t c0 = 0, c1 = 0, c2 = 0;
    BigInt discriminant() const;
};

enum class SplittingType { Inert, MixedSplit, TotallySplit, Ramified };

struct LocalFactor {
    std::uint64_t p = 0;
    SplittingType type = SplittingType::Inert;
    // one entry per distinct irreducible factor of the cubic mod p:
    // (degree, multiplicity); degree * multiplicity sums to 3
    std::vector<std::pair<int, int>> factors;

    std::uint64_t ideal_count(std::uint64_t k) const;  // ideals of norm p^k
    double euler_factor(double s) const;
    std::string type_string() const;  // "(3)", "(1)(2)", "(1)(1)(1)", "(1^2)(1)"
};

// splitting of f modulo p, from the degree of gcd(t^p - t, f) over F_p.
// Throws NonMaximalOrder when p^2 divides disc(f): counting ideals through
// the equation order is only exact when the discriminant is squarefree at p.
LocalFactor local_factor(std::uint64_t p, const IntegerCubic& f);

// number of ideals of norm n for n = 1..N, by a smallest-prime-factor sieve
// over the multiplicative local counts
std::vector<std::uint32_t> ideal_count_coefficients(const IntegerCubic& f,
                                                    std::uint64_t N);

struct ZetaEstimate {
    double euler = 0;       // product of local factors over p <= P
    double dirichlet = 0;   // sum of a_n n^{-s} over n <= P
    double tail_bound = 0;  // 3 P^{1-s} / (s-1)
};

// both truncations at P, with the crude tail estimate; requires s > 1
ZetaEstimate dedekind_zeta(double s, const IntegerCubic& f, std::uint64_t P);

struct FieldInvariants {
    int r1 = 3, r2 = 0;                  // signature, r1 + 2 r2 = 3
    std::uint64_t class_number = 1;
    double regulator = 1.0;              // supplied, never computed here
    std::uint64_t roots_of_unity = 2;
    std::uint64_t abs_disc = 1;
};

// residue at s = 1 of the plain zeta: 2^{r1} (2 pi)^{r2} h R / (w sqrt|d|)
double residue_kappa(const FieldInvariants& inv);

// |d|^{s/2} (pi^{-s/2} Gamma(s/2))^{r1} ((2 pi)^{1-s} Gamma(s))^{r2} * value
double completed_zeta(double s, const FieldInvariants& inv, double zeta_value);

// residue at s = 1 of the completed zeta; the Gamma factors there are 1,
// so this is sqrt|d| * kappa
double completed_residue(const FieldInvariants& inv);

// ratio of the completed zeta at consecutive arguments, Z(s) / Z(s+1)
double completed_ratio(double s, const FieldInvariants& inv, double zeta_s,
                       double zeta_s1);

struct VolumeConstants {
    double residue_ratio = 0;  // completed residue / completed value at 2
    double group_volume = 0;   // its reciprocal: the volume the ratio measures
};

VolumeConstants volume_constants(const FieldInvariants& inv, double zeta2);

}  // namespace triherm
