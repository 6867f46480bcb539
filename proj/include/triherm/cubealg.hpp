#pragma once

// Cubic algebra A = F[t]/(f) for a monic cubic f = t^3 + c2 t^2 + c1 t + c0
// with nonzero discriminant, together with its quadratic resolvent ring
// B = A[delta]/(delta^2 - D).  B hosts the two non-identity embeddings of A:
//   sigma_2,3(theta) = ((e1 - theta) +- delta / f'(theta)) / 2,
// swapped by the conjugation (p, q) |-> (p, -q).  All arithmetic is exact
// and characteristic 2 is rejected (the embeddings halve).

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "triherm/errors.hpp"
#include "triherm/fp.hpp"
#include "triherm/rat.hpp"

namespace triherm {

template <class F>
class Algebra {
  public:
    struct Elem;
    struct Res;

    // a0 + a1*theta + a2*theta^2
    struct Elem {
        F c0, c1, c2;
        const Algebra* alg;

        bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

        Elem operator-() const { return {-c0, -c1, -c2, alg}; }
        Elem& operator+=(const Elem& o) {
            same(o); c0 += o.c0; c1 += o.c1; c2 += o.c2; return *this;
        }
        Elem& operator-=(const Elem& o) {
            same(o); c0 -= o.c0; c1 -= o.c1; c2 -= o.c2; return *this;
        }
        friend Elem operator+(Elem a, const Elem& b) { return a += b; }
        friend Elem operator-(Elem a, const Elem& b) { return a -= b; }

        friend Elem operator*(const Elem& a, const Elem& b) {
            a.same(b);
            const Algebra& A = *a.alg;
            F t0 = a.c0 * b.c0;
            F t1 = a.c0 * b.c1 + a.c1 * b.c0;
            F t2 = a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0;
            F t3 = a.c1 * b.c2 + a.c2 * b.c1;
            F t4 = a.c2 * b.c2;
            const F& f0 = A.coef(0);
            const F& f1 = A.coef(1);
            const F& f2 = A.coef(2);
            // reduce with theta^3 = -c0 - c1 theta - c2 theta^2 and
            // theta^4 = c2 c0 + (c2 c1 - c0) theta + (c2^2 - c1) theta^2
            return {t0 - f0 * t3 + f2 * f0 * t4,
                    t1 - f1 * t3 + (f2 * f1 - f0) * t4,
                    t2 - f2 * t3 + (f2 * f2 - f1) * t4,
                    a.alg};
        }
        friend Elem operator*(const F& s, const Elem& a) {
            return {s * a.c0, s * a.c1, s * a.c2, a.alg};
        }
        friend Elem operator*(const Elem& a, const F& s) { return s * a; }

        friend bool operator==(const Elem& a, const Elem& b) {
            a.same(b);
            return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
        }
        friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

        F trace() const {
            const Algebra& A = *alg;
            // tr(1) = 3, tr(theta) = e1, tr(theta^2) = e1^2 - 2 e2
            F e1 = -A.c2_;
            return sfrom(c0, 3) * c0 + e1 * c1 + (e1 * e1 - A.c1_ - A.c1_) * c2;
        }

        F norm() const {
            Elem at = *this * alg->theta();
            Elem att = at * alg->theta();
            // det of the matrix of multiplication by *this
            return c0 * (at.c1 * att.c2 - at.c2 * att.c1)
                 - at.c0 * (c1 * att.c2 - c2 * att.c1)
                 + att.c0 * (c1 * at.c2 - c2 * at.c1);
        }

        // second symmetric function of the three embeddings
        F s2() const {
            F t = trace();
            return (t * t - (*this * *this).trace()) / sfrom(t, 2);
        }

        // product of the two "other" conjugates: sigma2(a) sigma3(a) as an
        // element of A, from the characteristic polynomial of a
        Elem other_conjugate_product() const {
            return *this * *this - trace() * *this + alg->from_scalar(s2());
        }

        Elem inverse() const {
            F n = norm();
            if (n.is_zero()) throw NonUnit();
            return other_conjugate_product() * n.inverse();
        }

        friend std::ostream& operator<<(std::ostream& os, const Elem& a) {
            return os << "(" << a.c0.str() << ", " << a.c1.str() << ", "
                      << a.c2.str() << ")";
        }

      private:
        void same(const Elem& o) const {
            require_internal(alg == o.alg, "elements of different algebras");
        }
        friend class Algebra;
    };

    // p + q*delta with delta^2 = D
    struct Res {
        Elem p, q;

        bool is_zero() const { return p.is_zero() && q.is_zero(); }
        bool in_subring() const { return q.is_zero(); }

        Res conj() const { return {p, -q}; }

        Res operator-() const { return {-p, -q}; }
        Res& operator+=(const Res& o) { p += o.p; q += o.q; return *this; }
        Res& operator-=(const Res& o) { p -= o.p; q -= o.q; return *this; }
        friend Res operator+(Res a, const Res& b) { return a += b; }
        friend Res operator-(Res a, const Res& b) { return a -= b; }
        friend Res operator*(const Res& a, const Res& b) {
            Elem d = a.p.alg->from_scalar(a.p.alg->disc());
            return {a.p * b.p + d * a.q * b.q, a.p * b.q + a.q * b.p};
        }
        friend Res operator*(const Elem& m, const Res& a) { return {m * a.p, m * a.q}; }
        friend Res operator*(const Res& a, const Elem& m) { return m * a; }
        friend bool operator==(const Res& a, const Res& b) {
            return a.p == b.p && a.q == b.q;
        }
        friend bool operator!=(const Res& a, const Res& b) { return !(a == b); }

        friend std::ostream& operator<<(std::ostream& os, const Res& r) {
            return os << "[" << r.p << " ; " << r.q << "]";
        }
    };

    Algebra(F c0, F c1, F c2)
        : c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)) {
        if constexpr (std::is_same_v<F, Fp>) {
            Fp::check_modulus(c0_.modulus());
            require_internal(c0_.modulus() == c1_.modulus() &&
                                 c0_.modulus() == c2_.modulus(),
                             "mixed moduli in cubic coefficients");
        }
        F e1 = -c2_, e2 = c1_, e3 = -c0_;
        F two = sfrom(e1, 2), three = sfrom(e1, 3);
        disc_ = e1 * e1 * e2 * e2 - two * two * e2 * e2 * e2
              - two * two * e1 * e1 * e1 * e3
              + three * sfrom(e1, 6) * e1 * e2 * e3
              - sfrom(e1, 27) * e3 * e3;
        if (disc_.is_zero()) throw ZeroDiscriminant();

        // sigma2(theta) = ((e1 - theta) + delta / f'(theta)) / 2
        F half = sfrom(e1, 2).inverse();
        Elem fprime = elem(c1_, two * c2_, three);
        emb2_theta_ = Res{half * (elem(e1, -sone(e1), szero(e1))),
                          half * fprime.inverse()};
        emb2_theta_sq_ = emb2_theta_ * emb2_theta_;
    }

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const F& coef(int i) const { return i == 0 ? c0_ : (i == 1 ? c1_ : c2_); }
    const F& disc() const { return disc_; }
    F sample() const { return c0_; }

    Elem elem(F a0, F a1, F a2) const {
        return {std::move(a0), std::move(a1), std::move(a2), this};
    }
    Elem from_scalar(F s) const { return elem(std::move(s), szero(c0_), szero(c0_)); }
    Elem from_ints(std::int64_t a0, std::int64_t a1, std::int64_t a2) const {
        return elem(sfrom(c0_, a0), sfrom(c0_, a1), sfrom(c0_, a2));
    }
    Elem zero() const { return from_ints(0, 0, 0); }
    Elem one() const { return from_ints(1, 0, 0); }
    Elem theta() const { return from_ints(0, 1, 0); }

    Res res(Elem p, Elem q) const { return {std::move(p), std::move(q)}; }
    Res res_from(Elem p) const { return {std::move(p), zero()}; }
    Res res_zero() const { return {zero(), zero()}; }

    // the three embeddings A -> B; embed(1, .) is the inclusion
    Res embed(int i, const Elem& a) const {
        require_internal(1 <= i && i <= 3, "embedding index out of range");
        if (i == 1) return res_from(a);
        Res r = res_from(from_scalar(a.c0))
              + emb2_theta_ * from_scalar(a.c1)
              + emb2_theta_sq_ * from_scalar(a.c2);
        return i == 2 ? r : r.conj();
    }

    // sigma2(u) sigma3(v) + sigma3(u) sigma2(v), computed inside A
    Elem cross(const Elem& u, const Elem& v) const {
        Elem tu = from_scalar(u.trace()) - u;
        Elem tv = from_scalar(v.trace()) - v;
        Elem uv = u * v;
        return tu * tv - from_scalar(uv.trace()) + uv;
    }

    Elem descend_to_A(const Res& r) const {
        if (!r.q.is_zero()) throw DescentFailure();
        return r.p;
    }
    F descend_to_base(const Elem& a) const {
        if (!a.c1.is_zero() || !a.c2.is_zero()) throw DescentFailure();
        return a.c0;
    }
    F descend_to_base(const Res& r) const { return descend_to_base(descend_to_A(r)); }

    bool irreducible() const {
        if (!irr_) irr_ = compute_irreducible();
        return *irr_;
    }

  private:
    bool compute_irreducible() const {
        if constexpr (std::is_same_v<F, Fp>) {
            // a cubic over F_p is irreducible iff it has no root in F_p,
            // iff resultant(f, t^p - t) = N(theta^p - theta) != 0
            std::uint64_t e = c0_.modulus();
            Elem r = one(), b = theta();
            while (e) {
                if (e & 1) r = r * b;
                b = b * b;
                e >>= 1;
            }
            return !(r - theta()).norm().is_zero();
        } else {
            return rational_irreducible();
        }
    }

    bool rational_irreducible() const;

    F c0_, c1_, c2_;
    F disc_;
    Res emb2_theta_{};
    Res emb2_theta_sq_{};
    mutable std::optional<bool> irr_;
};

// Rational case: substitute t = s/d with d clearing all denominators, turning
// f into a monic integer cubic g whose integer roots divide g(0); enumerate
// the divisors of g(0) from its factorization.  Bounded: this is a
// desk-scale tool, huge constant terms are rejected rather than ground down.
template <>
inline bool Algebra<Rat>::rational_irreducible() const {
    BigInt d = boost::multiprecision::lcm(
        boost::multiprecision::lcm(c0_.den(), c1_.den()), c2_.den());
    Rat rd{d};
    Rat b2 = c2_ * rd, b1 = c1_ * rd * rd, b0 = c0_ * rd * rd * rd;
    require_internal(b2.is_integer() && b1.is_integer() && b0.is_integer(),
                     "denominator clearing failed");
    BigInt g2 = b2.num(), g1 = b1.num(), g0 = b0.num();

    auto eval = [&](const BigInt& s) { return ((s + g2) * s + g1) * s + g0; };

    if (g0 == 0) return false;  // root at 0
    BigInt m = g0 < 0 ? BigInt(-g0) : g0;
    if (m > BigInt("100000000000000"))
        throw CapExceeded("constant term too large for rational root search");

    std::uint64_t n = m.convert_to<std::uint64_t>();
    std::vector<std::pair<std::uint64_t, int>> fac;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        int e = 0;
        while (n % q == 0) { n /= q; ++e; }
        fac.emplace_back(q, e);
    }
    if (n > 1) fac.emplace_back(n, 1);

    std::vector<BigInt> divs{BigInt(1)};
    for (auto [q, e] : fac) {
        std::size_t old = divs.size();
        BigInt pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pw);
        }
    }
    for (const BigInt& r : divs)
        if (eval(r) == 0 || eval(-r) == 0) return false;
    return true;
}

template <>
inline bool Algebra<Fp>::rational_irreducible() const {
    throw InternalError("rational root search reached over F_p");
}

}  // namespace triherm
