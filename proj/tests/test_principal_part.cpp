#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "triherm/principal.hpp"
#include "triherm/sympoly.hpp"

using namespace triherm;

namespace {

SymPoly S(const char* name) { return SymPoly::symbol(name); }

// Numeric value of the cutoff integral: integrate lambda^{s-j} (times
// log lambda when k = 1) over (0,1] against d(lambda)/lambda.  Substituting
// lambda = exp(-u) gives the smooth integral of exp(-(s-j)u) (-u)^k over
// [0, infinity), evaluated here with Simpson's rule on a truncated range.
double cutoff_integral(double a, int k) {
    const double upper = 60.0 / a;
    const int n = 200000;  // even
    const double h = upper / n;
    auto f = [&](double u) {
        const double base = std::exp(-a * u);
        return k == 0 ? base : base * (-u);
    };
    double acc = f(0.0) + f(upper);
    for (int i = 1; i < n; ++i) acc += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

const DeltaFlags kAllFlags{true, true, true};

}  // namespace

TEST_CASE("symbolic polynomials form a commutative ring") {
    auto a = S("A");
    auto b = S("B");
    CHECK(SymPoly{}.is_zero());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * (a + b) == a * a + Rat(2) * (a * b) + b * b);
    CHECK((a - a).is_zero());
    CHECK(a * SymPoly{} == SymPoly{});
    CHECK(a * SymPoly{Rat(1)} == a);
    // distributivity on a mixed expression
    auto p = Rat(3, 2) * a - b * b;
    CHECK(p * (a + b) == Rat(3, 2) * (a * a) + Rat(3, 2) * (a * b) -
                             b * b * a - b * b * b);
}

TEST_CASE("substitution replaces symbols simultaneously") {
    auto a = S("A");
    auto b = S("B");
    auto p = a * a - Rat(2) * (a * b);
    // swap A and B in one pass: had it been sequential, A -> B followed by
    // B -> A would collapse everything onto A
    std::map<std::string, SymPoly> swap{{"A", b}, {"B", a}};
    CHECK(p.substituted(swap) == b * b - Rat(2) * (a * b));
    // substitute a polynomial and a constant
    std::map<std::string, SymPoly> t{{"A", b + SymPoly{Rat(1)}},
                                     {"B", SymPoly{Rat(0)}}};
    CHECK(p.substituted(t) == b * b + Rat(2) * b + SymPoly{Rat(1)});
    // unlisted symbols ride through
    CHECK(p.substituted({}) == p);
}

TEST_CASE("deterministic rendering") {
    CHECK(SymPoly{}.str() == "0");
    CHECK(SymPoly{Rat(3, 2)}.str() == "3/2");
    CHECK((Rat(-6) * S(sym::kSk1m1)).str() == "-6*Sk1m1_R1Phi");
    CHECK((S(sym::kVol) * S(sym::kPhiHat0)).str() == "PhiHat0*Vol");
    CHECK((S(sym::kSk10Hat) - S(sym::kSk10)).str() ==
          "-Sk10_R1Phi + Sk10_R1PhiHat");
    auto a = S("A");
    CHECK((a * a * a - Rat(1, 3) * a).str() == "-1/3*A + A^3");
}

TEST_CASE("scaling laws carry the pinned exponents") {
    // the value at 0 is cutoff-invariant; its transform scales by -8
    CHECK(kLawPhi0.at(0) == 0);
    CHECK(kLawPhi0.j1 == 0);
    CHECK(kLawPhiHat0.at(0) == -8);
    CHECK(kLawSigma1.at(2) == -2);
    CHECK(kLawSigma1Hat.at(2) == -6);
    // the s-indexed families both reach power -4 at the edge point s = 1,
    // which is the common scaling of the residue on either side
    CHECK(kLawSeries.at(1) == -4);
    CHECK(kLawSeriesHat.at(1) == -4);
}

TEST_CASE("induced law on the constant term at the edge point") {
    LaurentData data{S("A"), S("B")};
    auto plain = scaled_zero_coefficient(kLawSeries, data);
    REQUIRE(plain.size() == 2);
    CHECK(plain[0].neg_power == 4);
    CHECK_FALSE(plain[0].has_log);
    CHECK(plain[0].coeff == S("B"));
    CHECK(plain[1].neg_power == 4);
    CHECK(plain[1].has_log);
    CHECK(plain[1].coeff == Rat(-3) * S("A"));  // minus on the plain side

    auto hat = scaled_zero_coefficient(kLawSeriesHat, data);
    CHECK(hat[1].coeff == Rat(3) * S("A"));  // plus on the transform side
}

TEST_CASE("cutoff rewrite matches numeric integration") {
    // c * lambda^{-j} integrates to c/(s-j): the rule's sign and magnitude,
    // checked at rational s against Simpson quadrature
    struct Sample {
        double s;
        int j;
    };
    for (const auto& [s, j] : std::vector<Sample>{{5.0, 4}, {3.0, 2}, {9.0, 8}}) {
        CHECK(std::abs(cutoff_integral(s - j, 0) - 1.0 / (s - j)) < 1e-9);
    }
    // c * lambda^{-4} log lambda integrates to -c/(s-4)^2, at the three
    // rational points s = 5, 6, 9/2
    for (double s : {5.0, 6.0, 4.5}) {
        const double a = s - 4.0;
        CHECK(std::abs(cutoff_integral(a, 1) - (-1.0 / (a * a))) < 1e-9);
    }
}

TEST_CASE("no active selector gives an empty table") {
    CHECK(boundary_lambda_expansion(DeltaFlags{}).empty());
    CHECK(assemble_principal_part(boundary_lambda_expansion(DeltaFlags{}))
              .empty());
}

TEST_CASE("full-space selector alone gives the two outer poles") {
    DeltaFlags flags;
    flags.d_sharp = true;
    auto pp = assemble_principal_part(boundary_lambda_expansion(flags));
    CHECK(pp.poles() == std::vector<int>{0, 8});
    CHECK(pp.order_at(8) == 1);
    CHECK(pp.order_at(0) == 1);
    CHECK(pp.coefficient(8, 1) == S(sym::kVol) * S(sym::kPhiHat0));
    CHECK(pp.coefficient(0, 1) == -(S(sym::kVol) * S(sym::kPhi0)));
    CHECK(fe_symmetry_check(pp));
}

TEST_CASE("assembled table reproduces the displayed one symbol for symbol") {
    auto assembled =
        assemble_principal_part(boundary_lambda_expansion(kAllFlags));
    auto displayed = reference_pole_table(kAllFlags);
    CHECK(assembled == displayed);
    CHECK(assembled.poles() == std::vector<int>{0, 2, 4, 6, 8});
    CHECK(assembled.order_at(4) == 2);
    for (int pole : {0, 2, 6, 8}) CHECK(assembled.order_at(pole) == 1);
    CHECK(fe_symmetry_check(assembled));
}

TEST_CASE("residue identity collapses the double-pole coefficient") {
    auto pp = assemble_principal_part(boundary_lambda_expansion(kAllFlags))
                  .substituted(residue_identity());
    CHECK(pp.coefficient(4, 2) == Rat(-6) * S(sym::kSk1m1));
    CHECK(pp.coefficient(4, 1) == S(sym::kSk10Hat) - S(sym::kSk10));
    // the collapsed table is symmetric under the relabeling composed with
    // the same identity (the bare swap would reintroduce the Hat residue)
    auto relabel = transform_swap();
    for (auto& [name, image] : relabel)
        image = image.substituted(residue_identity());
    CHECK(fe_symmetry_check(pp, relabel));
    CHECK_FALSE(fe_symmetry_check(pp));
}

TEST_CASE("vanishing residues make every pole simple") {
    auto pp = assemble_principal_part(boundary_lambda_expansion(kAllFlags))
                  .substituted(vanishing_residues());
    CHECK(pp.poles() == std::vector<int>{0, 2, 4, 6, 8});
    for (int pole : pp.poles()) CHECK(pp.order_at(pole) == 1);
    CHECK(pp.coefficient(4, 2).is_zero());
    CHECK(fe_symmetry_check(pp));
}

TEST_CASE("malformed expansions are rejected") {
    // a logarithmic term away from power 4
    std::vector<LambdaTerm> bad{{6, true, S("A")}};
    CHECK_THROWS_AS(assemble_principal_part(bad), MalformedLaurent);
    // a zero-coefficient log term elsewhere cancels before validation
    std::vector<LambdaTerm> cancelling{{6, true, S("A")},
                                       {6, true, -S("A")},
                                       {2, false, S("B")}};
    CHECK(assemble_principal_part(cancelling).poles() == std::vector<int>{2});
    // direct table edits respect the same shape constraints
    PrincipalPart pp;
    CHECK_THROWS_AS(pp.add(5, 2, S("A")), MalformedLaurent);
    CHECK_THROWS_AS(pp.add(4, 3, S("A")), MalformedLaurent);
    pp.add(4, 2, S("A"));
    pp.add(4, 2, -S("A"));
    CHECK(pp.empty());
}

TEST_CASE("symmetry check rejects tampered tables") {
    // an extra pole off the symmetric grid
    auto pp = assemble_principal_part(boundary_lambda_expansion(kAllFlags));
    pp.add(5, 1, S("A"));
    CHECK_FALSE(fe_symmetry_check(pp));

    // a rescaled outer coefficient breaks the pairing
    DeltaFlags sharp_only;
    sharp_only.d_sharp = true;
    PrincipalPart broken;
    broken.add(8, 1, S(sym::kVol) * S(sym::kPhiHat0));
    broken.add(0, 1, Rat(-2) * (S(sym::kVol) * S(sym::kPhi0)));
    CHECK_FALSE(fe_symmetry_check(broken));

    // a sign slip on the double pole: coefficient must be swap-invariant
    PrincipalPart odd;
    odd.add(4, 2, S(sym::kSk1m1Hat) - S(sym::kSk1m1));
    CHECK_FALSE(fe_symmetry_check(odd));
    // while the swap-symmetric combination passes
    PrincipalPart even;
    even.add(4, 2, S(sym::kSk1m1Hat) + S(sym::kSk1m1));
    CHECK(fe_symmetry_check(even));
}
