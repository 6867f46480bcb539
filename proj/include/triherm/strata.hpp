#pragma once

// Constructive orbit classification.  Every point over a field base (with f
// irreducible) is exactly one of: zero, semistable (nonzero invariant), or
// in one of two unstable strata S1 / S2, and for the unstable cases an
// explicit group element moves the point into the standard position
//   S1: (0, 0, *, *) with x122 != 0      S2: (0, 0, 0, *) with x222 != 0.
// The route: kill the leading and middle coefficients of the attached
// quadratic form with an element of GL2(F) found from the form's double
// root -- or, when that root is not F-rational, with a swap followed by a
// lower unipotent solving the affine equation for the middle coefficient.
// Every vanishing the mathematics forces is asserted, and the witness is
// replayed against the input before returning.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triherm/invariant.hpp"
#include "triherm/space.hpp"

namespace triherm {

enum class Stratum { SemiStable = 0, S1 = 1, S2 = 2, Zero = 3 };

inline const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::SemiStable: return "SemiStable";
        case Stratum::S1: return "S1";
        case Stratum::S2: return "S2";
        case Stratum::Zero: return "Zero";
    }
    return "?";
}

// boundary slices of the representation, by coordinate vanishing
enum class Region { Y1, Y1ss, Z1, Z1ss, Y2, Y2ss };

template <class F>
bool in_region(const Point<F>& x, Region r) {
    bool y1 = x.x111.is_zero() && x.x211.is_zero();
    switch (r) {
        case Region::Y1: return y1;
        case Region::Y1ss: return y1 && !x.x122.is_zero();
        case Region::Z1: return y1 && x.x222.is_zero();
        case Region::Z1ss: return y1 && x.x222.is_zero() && !x.x122.is_zero();
        case Region::Y2: return y1 && x.x122.is_zero();
        case Region::Y2ss: return y1 && x.x122.is_zero() && !x.x222.is_zero();
    }
    return false;
}

// point of P^1(F), scaled so the first nonzero coordinate is 1
template <class F>
struct ProjPoint {
    F r1, r2;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.r1 == b.r1 && a.r2 == b.r2;
    }
};

namespace detail {
template <class F>
std::array<F, 6> flatten(const typename Algebra<F>::Res& r) {
    return {r.p.c0, r.p.c1, r.p.c2, r.q.c0, r.q.c1, r.q.c2};
}
}  // namespace detail

// The unique double root of a degenerate form, as a point of P^1(F).
// None iff the form is identically zero; IrrationalRoot if the root exists
// only over an extension.  Found as the common F-kernel of the gradient
// rows 2a v1 + b v2 and b v1 + 2c v2, expanded over a basis of B -- the
// coefficients live in B, which has zero divisors whenever it splits, so
// no division in B is attempted.
template <class F>
std::optional<ProjPoint<F>> double_root(const QuadForm<F>& q) {
    const Algebra<F>& A = *q.a.p.alg;
    auto two = A.from_ints(2, 0, 0);

    std::vector<std::pair<F, F>> rows;
    auto add = [&](const typename Algebra<F>::Res& u,
                   const typename Algebra<F>::Res& v) {
        auto uf = detail::flatten<F>(u);
        auto vf = detail::flatten<F>(v);
        for (int i = 0; i < 6; ++i) rows.emplace_back(uf[i], vf[i]);
    };
    add(two * q.a, q.b);
    add(q.b, two * q.c);

    const std::pair<F, F>* pivot = nullptr;
    for (const auto& r : rows)
        if (!r.first.is_zero() || !r.second.is_zero()) {
            pivot = &r;
            break;
        }
    if (!pivot) return std::nullopt;

    F v1 = -pivot->second, v2 = pivot->first;
    for (const auto& r : rows)
        if (!(r.first * v1 + r.second * v2).is_zero()) throw IrrationalRoot();

    if (!v1.is_zero()) return ProjPoint<F>{sone(v1), v2 / v1};
    return ProjPoint<F>{szero(v2), sone(v2)};
}

template <class F>
struct StratumReport {
    Stratum label;
    GroupElement<F> witness;
    Point<F> normalized;
    std::vector<std::string> transcript;
};

namespace detail {

// GL2(F) element whose first row is the given root of the form, so that
// the transformed form loses its v1^2 and v1 v2 coefficients
template <class F>
GroupElement<F> root_completion(const Algebra<F>& A, const ProjPoint<F>& r) {
    if (r.r1.is_zero()) return GroupElement<F>::tau(A);
    return GroupElement<F>::upper_unipotent(A.from_scalar(r.r2));
}

template <class F>
bool kills_head(const GroupElement<F>& h, const Point<F>& x) {
    auto f = quad_form(act(h, x));
    return f.a.is_zero() && f.b.is_zero();
}

}  // namespace detail

template <class F>
StratumReport<F> classify(const Point<F>& x) {
    const Algebra<F>& A = x.alg();
    if (!A.irreducible()) throw SplitAlgebra();

    auto id = GroupElement<F>::identity(A);
    if (x.is_zero()) return {Stratum::Zero, id, x, {"point is zero"}};
    if (!discriminant(x).is_zero())
        return {Stratum::SemiStable, id, x, {"invariant is nonzero"}};

    std::vector<std::string> log;
    auto f = quad_form(x);
    GroupElement<F> h = id;

    if (f.is_zero()) {
        log.emplace_back("attached form vanishes identically");
    } else {
        std::optional<ProjPoint<F>> root;
        try {
            root = double_root(f);
            require_internal(root.has_value(),
                             "nonzero degenerate form without gradient rows");
        } catch (const IrrationalRoot&) {
            // Root not F-rational: swap if needed so the leading coefficient
            // is nonzero, then a lower unipotent kills the middle
            // coefficient (it moves affinely: b -> sigma3(lin + 2 u coef)),
            // and zero invariant forces the trailing one; the root of the
            // resulting form sits at (0:1).
            bool swap = f.a.is_zero();
            GroupElement<F> g0 = swap ? GroupElement<F>::tau(A) : id;
            if (swap) log.emplace_back("swapped coordinates to get a leading coefficient");
            Point<F> x0 = swap ? act_tau(x) : x;
            auto [lin, coef] = middle_affine(x0);
            require_internal(!coef.is_zero(),
                             "leading coefficient vanished after swap");
            auto u = -(lin * (A.from_ints(2, 0, 0) * coef).inverse());
            Point<F> y = act_n(u, x0);
            auto fy = quad_form(y);
            require_internal(fy.b.is_zero(), "middle coefficient survived");
            require_internal(fy.c.is_zero(),
                             "trailing coefficient nonzero at zero invariant");
            h = GroupElement<F>::tau(A) * GroupElement<F>::unipotent(u) * g0;
            log.emplace_back("irrational double root: used the affine middle-coefficient kill");
        }
        if (root) {
            log.emplace_back("double root found on the projective line");
            auto cand = detail::root_completion(A, *root);
            if (!detail::kills_head(cand, x)) cand = cand.transposed();
            require_internal(detail::kills_head(cand, x),
                             "neither completion convention killed the form head");
            h = cand;
        }
    }

    Point<F> xp = act(h, x);
    {
        auto fp = quad_form(xp);
        require_internal(fp.a.is_zero() && fp.b.is_zero(),
                         "normalization left the form head nonzero");
    }

    if (xp.x111.is_zero()) {
        require_internal(xp.x211.is_zero(),
                         "x211 nonzero with zero leading slot over a field");
        if (!xp.x122.is_zero()) {
            log.emplace_back("standard position with x122 nonzero");
            StratumReport<F> rep{Stratum::S1, h, xp, std::move(log)};
            require_internal(act(rep.witness, x) == rep.normalized,
                             "witness replay mismatch");
            require_internal(in_region(rep.normalized, Region::Y1ss),
                             "normalized point escapes its region");
            return rep;
        }
        require_internal(!xp.x222.is_zero(), "nonzero point reduced to zero");
        log.emplace_back("standard position with only x222 nonzero");
        StratumReport<F> rep{Stratum::S2, h, xp, std::move(log)};
        require_internal(act(rep.witness, x) == rep.normalized,
                         "witness replay mismatch");
        require_internal(in_region(rep.normalized, Region::Y2ss),
                         "normalized point escapes its region");
        return rep;
    }

    // leading slot nonzero: one more lower unipotent empties everything
    // but that slot, and the swap moves it to the far corner
    auto u2 = xp.x211 * (-xp.x111).inverse();
    Point<F> y = act_n(u2, xp);
    require_internal(y.x211.is_zero(), "unipotent failed to kill x211");
    require_internal(y.x122.is_zero(), "x122 nonzero after killing x211");
    require_internal(y.x222.is_zero(), "x222 nonzero after killing x211");
    log.emplace_back("killed x211 with a lower unipotent; swapped to the far corner");

    StratumReport<F> rep{Stratum::S2,
                         GroupElement<F>::tau(A) * GroupElement<F>::unipotent(u2) * h,
                         act_tau(y), std::move(log)};
    require_internal(act(rep.witness, x) == rep.normalized,
                     "witness replay mismatch");
    require_internal(in_region(rep.normalized, Region::Y2ss),
                     "normalized point escapes its region");
    return rep;
}

}  // namespace triherm
