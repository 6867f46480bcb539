#pragma once

// Exact symbolic assembly of the pole table of the zeta function attached
// to the space.  The boundary distribution is a finite sum of named
// functionals gated by three boolean character selectors; rescaling the
// test function by a cutoff parameter multiplies each functional by a
// fixed power of the cutoff (one family carries an induced logarithmic
// term), and integrating the cutoff against lambda^s turns each power
// into a simple pole and the logarithmic term into a double pole.

#include <map>
#include <string>
#include <vector>

#include "triherm/errors.hpp"
#include "triherm/sympoly.hpp"

namespace triherm {

// boolean character selectors gating the three boundary contributions
struct DeltaFlags {
    bool d_sharp = false;  // full-space terms: value at 0 and transform at 0
    bool d1 = false;       // doubly degenerate stratum (s-indexed series)
    bool d2 = false;       // simply degenerate stratum (fixed theta value)
};

// the symbol vocabulary of the assembly; *Hat names belong to the Fourier
// transform of the test function
namespace sym {
inline constexpr const char* kPhi0 = "Phi0";
inline constexpr const char* kPhiHat0 = "PhiHat0";
inline constexpr const char* kVol = "Vol";  // fundamental-domain volume
inline constexpr const char* kSigma1 = "Sigma1_R2Phi";
inline constexpr const char* kSigma1Hat = "Sigma1_R2PhiHat";
// Laurent data at the edge point of the s-indexed boundary series:
// constant term (suffix 0) and residue (suffix m1)
inline constexpr const char* kSk10 = "Sk10_R1Phi";
inline constexpr const char* kSk10Hat = "Sk10_R1PhiHat";
inline constexpr const char* kSk1m1 = "Sk1m1_R1Phi";
inline constexpr const char* kSk1m1Hat = "Sk1m1_R1PhiHat";
}  // namespace sym

// one term  coeff * lambda^{-neg_power} * (log lambda if has_log)
struct LambdaTerm {
    int neg_power = 0;
    bool has_log = false;
    SymPoly coeff;
};

// exponent family j(s) = j0 + j1*s: rescaling the test function by lambda
// multiplies the functional at s by lambda^{j(s)}
struct ExponentFamily {
    int j0 = 0;
    int j1 = 0;
    int at(int s) const { return j0 + j1 * s; }
};

// the six scaling laws; the s-independent ones are stated at the argument
// where the boundary distribution evaluates them
inline constexpr ExponentFamily kLawPhi0{0, 0};
inline constexpr ExponentFamily kLawPhiHat0{-8, 0};
inline constexpr ExponentFamily kLawSigma1{-2, 0};
inline constexpr ExponentFamily kLawSigma1Hat{-6, 0};
inline constexpr ExponentFamily kLawSeries{-1, -3};  // evaluated near s = 1
inline constexpr ExponentFamily kLawSeriesHat{-7, 3};

// residue and constant term of an s-indexed functional at the edge point
struct LaurentData {
    SymPoly residue;   // (-1)-coefficient
    SymPoly constant;  // (0)-coefficient
};

// Induced scaling of the constant term at s = 1: expanding
// lambda^{j(s)} = lambda^{j(1)} (1 + j1 (s-1) log lambda + ...) against
// residue/(s-1) + constant gives
//   constant  ->  lambda^{j(1)} (constant + j1 * log lambda * residue).
std::vector<LambdaTerm> scaled_zero_coefficient(const ExponentFamily& fam,
                                                const LaurentData& data);

// full cutoff expansion of the boundary distribution: for each selector
// switched on, the transform-side term minus the plain-side term
std::vector<LambdaTerm> boundary_lambda_expansion(const DeltaFlags& flags);

// pole location -> (order -> exact coefficient); orders are 1 or 2 and
// only location 4 may carry a double pole
class PrincipalPart {
public:
    // accumulates onto any existing entry; dropping to zero removes it
    void add(int pole, int order, const SymPoly& coeff);

    SymPoly coefficient(int pole, int order) const;  // zero when absent
    int order_at(int pole) const;                    // 0 when absent
    std::vector<int> poles() const;                  // ascending
    bool empty() const { return table_.empty(); }

    PrincipalPart substituted(
        const std::map<std::string, SymPoly>& table) const;

    const std::map<int, std::map<int, SymPoly>>& table() const {
        return table_;
    }

    friend bool operator==(const PrincipalPart& a, const PrincipalPart& b) {
        return a.table_ == b.table_;
    }
    friend bool operator!=(const PrincipalPart& a, const PrincipalPart& b) {
        return !(a == b);
    }

private:
    std::map<int, std::map<int, SymPoly>> table_;
};

// Integrate the cutoff against lambda^s over (0,1]:
//   c * lambda^{-j}            ->  c / (s - j)      (pole j, order 1)
//   c * lambda^{-4} log lambda -> -c / (s - 4)^2    (pole 4, order 2)
// Logarithmic terms anywhere but at power 4 raise MalformedLaurent.
PrincipalPart assemble_principal_part(const std::vector<LambdaTerm>& expansion);

// the displayed pole table written down directly -- an independent route
// that the assembled one must reproduce symbol for symbol
PrincipalPart reference_pole_table(const DeltaFlags& flags);

// the transform-side residue equals the plain-side residue; substituting
// turns the double-pole coefficient into -6 * (plain residue)
std::map<std::string, SymPoly> residue_identity();

// both residues vanish (test functions supported away from the degenerate
// locus at a real place); every pole becomes simple
std::map<std::string, SymPoly> vanishing_residues();

// exchange each plain symbol with its transform-side partner
std::map<std::string, SymPoly> transform_swap();

// true iff s -> 8 - s combined with the relabeling carries the table to
// itself: order-1 coefficients pair as coeff(8-j) = -relabel(coeff(j)) and
// the double-pole coefficient at 4 is relabel-invariant.  Tables already
// reduced by an identity (e.g. residue_identity()) must pass a relabeling
// composed with that identity.
bool fe_symmetry_check(const PrincipalPart& pp,
                       const std::map<std::string, SymPoly>& relabel);

// same check under the plain transform_swap()
bool fe_symmetry_check(const PrincipalPart& pp);

}  // namespace triherm
