#pragma once

// The 8-dimensional representation: points x = (x111, x211, x122, x222) in
// F x A x A x F, viewed as 2x2x2 arrays over the resolvent ring B whose
// three axes carry the three embeddings of A.  The group G = GL1(F) x
// GL2(A) acts by the scalar times one matrix contraction per axis, with
// axis i twisted by sigma_i.

#include <array>
#include <cstdint>
#include <ostream>

#include "triherm/cubealg.hpp"
#include "triherm/errors.hpp"

namespace triherm {

template <class T>
struct Mat2 {
    T a, b, c, d;  // [[a, b], [c, d]]

    T det() const { return a * d - b * c; }
    Mat2 transposed() const { return {a, c, b, d}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    Mat2 inverse() const {
        T di = det().inverse();
        return {d * di, -b * di, -c * di, a * di};
    }
};

template <class F>
struct Point {
    using Elem = typename Algebra<F>::Elem;

    F x111;
    Elem x211, x122;
    F x222;

    const Algebra<F>& alg() const { return *x211.alg; }

    bool is_zero() const {
        return x111.is_zero() && x211.is_zero() && x122.is_zero() && x222.is_zero();
    }

    Point operator-() const { return {-x111, -x211, -x122, -x222}; }
    friend Point operator+(const Point& x, const Point& y) {
        return {x.x111 + y.x111, x.x211 + y.x211, x.x122 + y.x122, x.x222 + y.x222};
    }
    friend Point operator-(const Point& x, const Point& y) {
        return {x.x111 - y.x111, x.x211 - y.x211, x.x122 - y.x122, x.x222 - y.x222};
    }
    friend Point operator*(const F& s, const Point& x) {
        return {s * x.x111, s * x.x211, s * x.x122, s * x.x222};
    }
    friend bool operator==(const Point& x, const Point& y) {
        return x.x111 == y.x111 && x.x211 == y.x211 && x.x122 == y.x122 &&
               x.x222 == y.x222;
    }
    friend bool operator!=(const Point& x, const Point& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const Point& x) {
        return os << "{" << x.x111.str() << "; " << x.x211 << "; " << x.x122
                  << "; " << x.x222.str() << "}";
    }
};

template <class F>
Point<F> zero_point(const Algebra<F>& A) {
    return {szero(A.sample()), A.zero(), A.zero(), szero(A.sample())};
}

// basis point with a 1 in the first (resp. last) corner
template <class F>
Point<F> corner_point(const Algebra<F>& A, bool first) {
    auto x = zero_point(A);
    if (first)
        x.x111 = sone(A.sample());
    else
        x.x222 = sone(A.sample());
    return x;
}

template <class F>
struct GroupElement {
    using Elem = typename Algebra<F>::Elem;

    F t1;
    Mat2<Elem> g2;

    const Algebra<F>& alg() const { return *g2.a.alg; }

    static GroupElement identity(const Algebra<F>& A) {
        return {sone(A.sample()), {A.one(), A.zero(), A.zero(), A.one()}};
    }
    // lower unipotent [[1, 0], [u, 1]]
    static GroupElement unipotent(const Elem& u) {
        const Algebra<F>& A = *u.alg;
        return {sone(A.sample()), {A.one(), A.zero(), u, A.one()}};
    }
    // upper unipotent [[1, u], [0, 1]]
    static GroupElement upper_unipotent(const Elem& u) {
        const Algebra<F>& A = *u.alg;
        return {sone(A.sample()), {A.one(), u, A.zero(), A.one()}};
    }
    static GroupElement diag(F t1, const Elem& t21, const Elem& t22) {
        const Algebra<F>& A = *t21.alg;
        return {std::move(t1), {t21, A.zero(), A.zero(), t22}};
    }
    // the coordinate swap [[0, 1], [1, 0]]
    static GroupElement tau(const Algebra<F>& A) {
        return {sone(A.sample()), {A.zero(), A.one(), A.one(), A.zero()}};
    }
    static GroupElement scale(const Algebra<F>& A, F t1) {
        auto g = identity(A);
        g.t1 = std::move(t1);
        return g;
    }

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        return {g.t1 * h.t1, g.g2 * h.g2};
    }
    friend bool operator==(const GroupElement& g, const GroupElement& h) {
        return g.t1 == h.t1 && g.g2 == h.g2;
    }
    friend bool operator!=(const GroupElement& g, const GroupElement& h) {
        return !(g == h);
    }

    GroupElement inverse() const { return {t1.inverse(), g2.inverse()}; }
    GroupElement transposed() const { return {t1, g2.transposed()}; }

    // norm of the GL2 determinant; the character of the relative invariant
    F chi() const { return g2.det().norm(); }

    // the contragredient twisted by the coordinate swap:
    // (t1, g2) |-> (1/t1, tau (t g2)^{-1} tau) = (1/t1, [[a,-b],[-c,d]]/det)
    GroupElement dual() const {
        Elem di = g2.det().inverse();
        return {t1.inverse(), {g2.a * di, -g2.b * di, -g2.c * di, g2.d * di}};
    }
};

template <class F>
using Cube = std::array<std::array<std::array<typename Algebra<F>::Res, 2>, 2>, 2>;

// embed a GL2(A) matrix entrywise into the resolvent ring
template <class F>
Mat2<typename Algebra<F>::Res> embed_mat(int i, const Mat2<typename Algebra<F>::Elem>& m) {
    const Algebra<F>& A = *m.a.alg;
    return {A.embed(i, m.a), A.embed(i, m.b), A.embed(i, m.c), A.embed(i, m.d)};
}

template <class F>
Cube<F> lift(const Point<F>& x) {
    const Algebra<F>& A = x.alg();
    Cube<F> m;
    m[0][0][0] = A.res_from(A.from_scalar(x.x111));
    m[1][0][0] = A.embed(1, x.x211);
    m[0][1][0] = A.embed(2, x.x211);
    m[0][0][1] = A.embed(3, x.x211);
    m[0][1][1] = A.embed(1, x.x122);
    m[1][0][1] = A.embed(2, x.x122);
    m[1][1][0] = A.embed(3, x.x122);
    m[1][1][1] = A.res_from(A.from_scalar(x.x222));
    return m;
}

// read a point back off a 2x2x2 array, checking the sigma-compatibility
// that any group transform is forced to preserve
template <class F>
Point<F> descend_cube(const Cube<F>& m) {
    const Algebra<F>& A = *m[0][0][0].p.alg;
    Point<F> x{A.descend_to_base(m[0][0][0]),
               A.descend_to_A(m[1][0][0]),
               A.descend_to_A(m[0][1][1]),
               A.descend_to_base(m[1][1][1])};
    require_internal(m[0][1][0] == A.embed(2, x.x211) &&
                         m[0][0][1] == A.embed(3, x.x211),
                     "cube lost sigma-compatibility in slot 211");
    require_internal(m[1][0][1] == A.embed(2, x.x122) &&
                         m[1][1][0] == A.embed(3, x.x122),
                     "cube lost sigma-compatibility in slot 122");
    return x;
}

template <class F>
Point<F> act(const GroupElement<F>& g, const Point<F>& x) {
    using Res = typename Algebra<F>::Res;
    const Algebra<F>& A = x.alg();
    Cube<F> m = lift(x);

    auto contract = [](const Cube<F>& in, const Mat2<Res>& M, int axis) {
        auto at = [&](const Cube<F>& c, int i, int j, int k) -> const Res& {
            return c[i][j][k];
        };
        Cube<F> out = in;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    int idx[3] = {i, j, k};
                    const Res& row0 = M.*(idx[axis] == 0 ? &Mat2<Res>::a : &Mat2<Res>::c);
                    const Res& row1 = M.*(idx[axis] == 0 ? &Mat2<Res>::b : &Mat2<Res>::d);
                    int lo[3] = {i, j, k}, hi[3] = {i, j, k};
                    lo[axis] = 0; hi[axis] = 1;
                    out[i][j][k] = row0 * at(in, lo[0], lo[1], lo[2]) +
                                   row1 * at(in, hi[0], hi[1], hi[2]);
                }
        return out;
    };

    m = contract(m, embed_mat<F>(1, g.g2), 0);
    m = contract(m, embed_mat<F>(2, g.g2), 1);
    m = contract(m, embed_mat<F>(3, g.g2), 2);

    typename Algebra<F>::Elem t1e = A.from_scalar(g.t1);
    for (auto& plane : m)
        for (auto& line : plane)
            for (auto& entry : line) entry = t1e * entry;

    return descend_cube<F>(m);
}

// closed form for the lower unipotent n(u) = [[1,0],[u,1]]
template <class F>
Point<F> act_n(const typename Algebra<F>::Elem& u, const Point<F>& x) {
    const Algebra<F>& A = *u.alg;
    auto ocp_u = u.other_conjugate_product();
    typename Algebra<F>::Elem y211 = x.x211 + u * A.from_scalar(x.x111);
    typename Algebra<F>::Elem y122 =
        x.x122 + ocp_u * A.from_scalar(x.x111) + A.cross(u, x.x211);
    F y222 = x.x222 + u.norm() * x.x111 + (ocp_u * x.x211).trace() +
             (u * x.x122).trace();
    return {x.x111, std::move(y211), std::move(y122), std::move(y222)};
}

// closed form for (t1, diag(t21, t22))
template <class F>
Point<F> act_diag(const F& t1, const typename Algebra<F>::Elem& t21,
                  const typename Algebra<F>::Elem& t22, const Point<F>& x) {
    const Algebra<F>& A = *t21.alg;
    return {t1 * t21.norm() * x.x111,
            A.from_scalar(t1) * t22 * t21.other_conjugate_product() * x.x211,
            A.from_scalar(t1) * t21 * t22.other_conjugate_product() * x.x122,
            t1 * t22.norm() * x.x222};
}

// closed form for the coordinate swap
template <class F>
Point<F> act_tau(const Point<F>& x) {
    return {x.x222, x.x122, x.x211, x.x111};
}

}  // namespace triherm
