#pragma once

// The binary quadratic form attached to a point (pairing the last axis of
// the 2x2x2 array against a variable vector), its discriminant -- the
// degree-4 relative invariant of the action -- and the symmetric pairing
// that realizes the dual representation.

#include <utility>

#include "triherm/cubealg.hpp"
#include "triherm/space.hpp"

namespace triherm {

// a v1^2 + b v1 v2 + c v2^2 with coefficients in the resolvent ring
template <class F>
struct QuadForm {
    using Res = typename Algebra<F>::Res;

    Res a, b, c;

    friend bool operator==(const QuadForm& f, const QuadForm& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }
    friend bool operator!=(const QuadForm& f, const QuadForm& g) { return !(f == g); }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

    Res eval(const Res& v1, const Res& v2) const {
        return a * v1 * v1 + b * v1 * v2 + c * v2 * v2;
    }

    // F(M v): substitute v1 -> m.a v1 + m.b v2, v2 -> m.c v1 + m.d v2
    QuadForm substituted(const Mat2<Res>& m) const {
        const Algebra<F>& A = *a.p.alg;
        auto two = A.res_from(A.from_ints(2, 0, 0));
        return {a * m.a * m.a + b * m.a * m.c + c * m.c * m.c,
                two * a * m.a * m.b + b * (m.a * m.d + m.b * m.c) +
                    two * c * m.c * m.d,
                a * m.b * m.b + b * m.b * m.d + c * m.d * m.d};
    }

    QuadForm scaled(const Res& k) const { return {k * a, k * b, k * c}; }
};

// the two 2x2 slices of the lifted array along the last axis
template <class F>
std::pair<Mat2<typename Algebra<F>::Res>, Mat2<typename Algebra<F>::Res>>
pencil(const Point<F>& x) {
    Cube<F> m = lift(x);
    return {Mat2<typename Algebra<F>::Res>{m[0][0][0], m[0][1][0],
                                           m[1][0][0], m[1][1][0]},
            Mat2<typename Algebra<F>::Res>{m[0][0][1], m[0][1][1],
                                           m[1][0][1], m[1][1][1]}};
}

// det(X1 v1 + X2 v2) as a binary quadratic over B
template <class F>
QuadForm<F> quad_form(const Point<F>& x) {
    auto [X1, X2] = pencil(x);
    return {X1.det(),
            X1.a * X2.d + X2.a * X1.d - X1.b * X2.c - X2.b * X1.c,
            X2.det()};
}

namespace detail {
// descent that is mathematically forced, so failure is an internal bug
template <class F>
F forced_descend(const typename Algebra<F>::Res& r, const Algebra<F>& A) {
    require_internal(r.q.is_zero(), "forced value escapes the cubic subring");
    require_internal(r.p.c1.is_zero() && r.p.c2.is_zero(),
                     "forced value escapes the base field");
    return r.p.c0;
}
}  // namespace detail

// discriminant of the attached form; a degree-4 relative invariant.
//
// Computed without lifting: with b = embed(3, lin) and a = embed(3, coef)
// from middle_affine, and the coordinate swap exchanging a with c,
//   b^2 - 4 a c = embed(3, lin^2 - 4 coef(x) coef(swap x)),
// and the embedding fixes base-field scalars, so the discriminant is the
// scalar part of that A-valued bracket.  The lifted pencil route stays
// available through quad_form and must agree (see the invariant tests).
template <class F>
F discriminant(const Point<F>& x) {
    const Algebra<F>& A = x.alg();
    auto [lin, coef] = middle_affine(x);
    // second middle_affine component of the coordinate-swapped point
    auto coef_swapped = A.from_scalar(x.x222) * x.x211 -
                        x.x122.other_conjugate_product();
    auto d = lin * lin - A.from_ints(4, 0, 0) * (coef * coef_swapped);
    require_internal(d.c1.is_zero() && d.c2.is_zero(),
                     "invariant escapes the base field");
    return d.c0;
}

// discriminant(g x) = t1^4 chi(g)^2 discriminant(x)
template <class F>
F covariance_factor(const GroupElement<F>& g) {
    F chi = g.chi();
    F t = g.t1 * g.t1;
    return t * t * chi * chi;
}

// the two A-valued polynomials controlling the middle coefficient:
// quad_form(x).b = embed(3, first), quad_form(x).a = embed(3, second), and
// lower-unipotent translation by u moves b to embed(3, first + 2 u second)
template <class F>
std::pair<typename Algebra<F>::Elem, typename Algebra<F>::Elem>
middle_affine(const Point<F>& x) {
    const Algebra<F>& A = x.alg();
    auto w = x.x211 * x.x122;
    auto lin = A.from_scalar(x.x111 * x.x222) + A.from_ints(2, 0, 0) * w -
               A.from_scalar(w.trace());
    auto coef = A.from_scalar(x.x111) * x.x122 -
                x.x211.other_conjugate_product();
    return {lin, coef};
}

// [x, y]' = sum over the 2x2x2 array of entrywise products, descended
template <class F>
F pairing_prime(const Point<F>& x, const Point<F>& y) {
    return x.x111 * y.x111 + (x.x211 * y.x211).trace() +
           (x.x122 * y.x122).trace() + x.x222 * y.x222;
}

// symmetric pairing [x, y] = [x, tau y]'; satisfies
// [g x, y] = [x, dual(g)^{-1} y]
template <class F>
F pairing(const Point<F>& x, const Point<F>& y) {
    return pairing_prime(x, act_tau(y));
}

}  // namespace triherm
