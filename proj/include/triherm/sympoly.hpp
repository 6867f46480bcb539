#pragma once

// Sparse multivariate polynomials over the rationals in named symbols --
// the exact coefficient algebra for the symbolic pole-table assembly.

#include <map>
#include <string>

#include "triherm/rat.hpp"

namespace triherm {

// symbol name -> positive exponent; the empty monomial is the constant term
using Monomial = std::map<std::string, int>;

class SymPoly {
public:
    SymPoly() = default;             // the zero polynomial
    explicit SymPoly(const Rat& c);  // a constant
    static SymPoly symbol(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const Rat& c, const SymPoly& p);

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) {
        return !(a == b);
    }

    // simultaneous replacement of symbols by polynomials; symbols not
    // listed in the table are left alone
    SymPoly substituted(const std::map<std::string, SymPoly>& table) const;

    // deterministic rendering, monomials in lexicographic order:
    // "-6*Sk1m1_R1Phi", "PhiHat0*Vol", "3/2", "0"
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);

    std::map<Monomial, Rat> terms_;  // invariant: no zero coefficients stored
};

}  // namespace triherm
