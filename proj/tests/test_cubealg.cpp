#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "triherm/cubealg.hpp"

using namespace triherm;

namespace {

Algebra<Rat> rat_alg(std::int64_t c0, std::int64_t c1, std::int64_t c2) {
    return Algebra<Rat>(Rat(c0), Rat(c1), Rat(c2));
}

}  // namespace

TEST_CASE("rational scalar basics") {
    CHECK(Rat::parse("3/4").str() == "3/4");
    CHECK(Rat::parse("-5").str() == "-5");
    CHECK(Rat::parse("7/1").str() == "7");
    CHECK(Rat::parse("6/4").str() == "3/2");
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK((Rat(2) / Rat(3)).str() == "2/3");
    CHECK_THROWS_AS(Rat(0).inverse(), NonUnit);
    CHECK_THROWS_AS(Rat::parse("abc"), DataError);
    CHECK(Rat(-3, 6).str() == "-1/2");
    CHECK(Rat(5).is_integer());
    CHECK(!Rat(5, 2).is_integer());
}

TEST_CASE("prime field basics") {
    Fp a = Fp::from_int(-3, 7);
    CHECK(a.value() == 4);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(Fp::parse("1/2", 7).value() == 4);  // 2*4 = 8 = 1 mod 7
    CHECK(Fp::parse("-1", 5).value() == 4);
    CHECK_THROWS_AS(Fp(0, 7).inverse(), NonUnit);
    CHECK_THROWS_AS(Fp::check_modulus(2), BadCharacteristic);
    CHECK_THROWS_AS(Fp::check_modulus(9), DataError);
    CHECK_NOTHROW(Fp::check_modulus(2147483647));  // largest allowed prime
    CHECK_THROWS_AS(Fp::check_modulus(std::uint64_t{1} << 31), DataError);
}

TEST_CASE("cubic discriminants") {
    CHECK(rat_alg(-2, 0, 0).disc() == Rat(-108));   // t^3 - 2
    CHECK(rat_alg(-1, -1, 0).disc() == Rat(-23));   // t^3 - t - 1
    CHECK(rat_alg(0, -1, 0).disc() == Rat(4));      // t^3 - t
    CHECK(rat_alg(1, 2, 3).disc() == rat_alg(1, 2, 3).disc());
    CHECK_THROWS_AS(rat_alg(2, -3, 0), ZeroDiscriminant);  // (t-1)^2 (t+2)
    CHECK_THROWS_AS(Algebra<Fp>(Fp::from_int(-2, 3), Fp(0, 3), Fp(0, 3)),
                    ZeroDiscriminant);  // disc(t^3-2) = -108 = 0 mod 3
}

TEST_CASE("trace, norm, inverse on t^3 - 2") {
    auto A = rat_alg(-2, 0, 0);
    auto th = A.theta();
    CHECK(th.trace() == Rat(0));
    CHECK(th.norm() == Rat(2));
    CHECK((th * th).trace() == Rat(0));
    CHECK((th * th).norm() == Rat(4));
    CHECK((A.one() + th).norm() == Rat(3));
    CHECK(th.inverse() == A.elem(Rat(0), Rat(0), Rat(1, 2)));
    CHECK(th * th.inverse() == A.one());
    CHECK(th.s2() == Rat(0));

    auto B = rat_alg(0, -1, 0);  // t^3 - t: theta is a zero divisor
    CHECK(B.theta().norm() == Rat(0));
    CHECK_THROWS_AS(B.theta().inverse(), NonUnit);
}

TEST_CASE("second symmetric function equals middle coefficient") {
    auto A = rat_alg(-1, -1, 0);
    CHECK(A.theta().s2() == Rat(-1));  // e2 of t^3 - t - 1
    auto B = rat_alg(5, 7, -3);
    CHECK(B.theta().s2() == Rat(7));
}

TEST_CASE("embeddings into the resolvent ring") {
    auto A = rat_alg(-1, -1, 0);
    auto th = A.theta();

    auto s1 = A.embed(1, th), s2 = A.embed(2, th), s3 = A.embed(3, th);
    CHECK(s1 + s2 + s3 == A.res_from(A.from_scalar(Rat(0))));  // e1 = 0
    CHECK(s1 * s2 * s3 == A.res_from(A.from_scalar(Rat(1))));  // e3 = 1
    CHECK(s2 != s3);
    CHECK(s3 == s2.conj());

    // each embedded theta is a root of f
    for (int i = 1; i <= 3; ++i) {
        auto s = A.embed(i, th);
        auto val = s * s * s - s - A.res_from(A.one());
        CHECK(val.is_zero());
    }
}

TEST_CASE("embedding properties at random elements") {
    auto A = rat_alg(-1, -1, 0);
    for (int trial = 0; trial < 25; ++trial) {
        auto u = testutil::rand_elem(A);
        auto v = testutil::rand_elem(A);

        // ring homomorphism
        CHECK(A.embed(2, u * v) == A.embed(2, u) * A.embed(2, v));
        CHECK(A.embed(3, u + v) == A.embed(3, u) + A.embed(3, v));

        // trace and norm are the symmetric functions of the embeddings
        auto sum = A.embed(1, u) + A.embed(2, u) + A.embed(3, u);
        CHECK(sum == A.res_from(A.from_scalar(u.trace())));
        auto prod = A.embed(1, u) * A.embed(2, u) * A.embed(3, u);
        CHECK(prod == A.res_from(A.from_scalar(u.norm())));

        // sigma2(u) sigma3(u) = other_conjugate_product(u), inside A
        CHECK(A.embed(2, u) * A.embed(3, u) ==
              A.embed(1, u.other_conjugate_product()));

        // cross-term closed form
        auto lhs = A.embed(2, u) * A.embed(3, v) + A.embed(3, u) * A.embed(2, v);
        CHECK(lhs == A.embed(1, A.cross(u, v)));
        CHECK(A.cross(u, v) == A.cross(v, u));

        // multiplicativity of the norm
        CHECK((u * v).norm() == u.norm() * v.norm());
    }
}

TEST_CASE("embedding properties over a prime field") {
    Algebra<Fp> A(Fp::from_int(-2, 7), Fp(0, 7), Fp(0, 7));  // t^3 - 2 over F_7
    for (int trial = 0; trial < 25; ++trial) {
        auto u = testutil::rand_elem(A);
        auto v = testutil::rand_elem(A);
        CHECK(A.embed(2, u * v) == A.embed(2, u) * A.embed(2, v));
        CHECK(A.embed(2, u) * A.embed(3, u) ==
              A.embed(1, u.other_conjugate_product()));
        auto lhs = A.embed(2, u) * A.embed(3, v) + A.embed(3, u) * A.embed(2, v);
        CHECK(lhs == A.embed(1, A.cross(u, v)));
        CHECK((u * v).norm() == u.norm() * v.norm());
        if (!u.norm().is_zero()) CHECK(u * u.inverse() == A.one());
    }
}

TEST_CASE("descent guards") {
    auto A = rat_alg(-2, 0, 0);
    CHECK(A.descend_to_base(A.from_scalar(Rat(5))) == Rat(5));
    CHECK_THROWS_AS(A.descend_to_base(A.theta()), DescentFailure);
    CHECK_THROWS_AS(A.descend_to_A(A.res(A.zero(), A.one())), DescentFailure);
    CHECK(A.descend_to_A(A.res_from(A.theta())) == A.theta());
}

TEST_CASE("irreducibility over the rationals") {
    CHECK(rat_alg(-1, -1, 0).irreducible());
    CHECK(rat_alg(-2, 0, 0).irreducible());
    CHECK(rat_alg(2, -4, 0).irreducible());      // Eisenstein at 2
    CHECK(!rat_alg(0, -1, 0).irreducible());     // t(t-1)(t+1)
    CHECK(!rat_alg(-6, 11, -6).irreducible());   // (t-1)(t-2)(t-3)
    // t^3 - t/2 - 1/2 = (t-1)(t^2+t+1/2)/... has rational root 1
    CHECK(!Algebra<Rat>(Rat(-1, 2), Rat(-1, 2), Rat(0)).irreducible());
    // 1/3 is a root of t^3 + t^2 - t + 5/27... use (3t-1)(...): f = (t-1/3)(t^2+t+3)
    CHECK(!Algebra<Rat>(Rat(-1), Rat(8, 3), Rat(2, 3)).irreducible());
    CHECK_THROWS_AS(Algebra<Rat>(Rat::parse("-1000000000000000"), Rat(0), Rat(0))
                        .irreducible(),
                    CapExceeded);
}

TEST_CASE("irreducibility over prime fields") {
    // t^3 - t - 1 over F_3 (no roots: f(0)=-1, f(1)=-1, f(2)=5=2)
    Algebra<Fp> A(Fp::from_int(-1, 3), Fp::from_int(-1, 3), Fp(0, 3));
    CHECK(A.irreducible());
    // t^3 - 2 over F_5 has the root 3
    Algebra<Fp> B(Fp::from_int(-2, 5), Fp(0, 5), Fp(0, 5));
    CHECK(!B.irreducible());
    // t^3 - 2 over F_7: 2 is not a cube mod 7
    Algebra<Fp> C(Fp::from_int(-2, 7), Fp(0, 7), Fp(0, 7));
    CHECK(C.irreducible());
    // t^3 + t + 1 over F_5 (roots would need f(x)=0; none exist)
    Algebra<Fp> D(Fp(1, 5), Fp(1, 5), Fp(0, 5));
    CHECK(D.irreducible());
}

TEST_CASE("ring axioms at random elements") {
    auto A = rat_alg(1, -5, 1);
    for (int trial = 0; trial < 20; ++trial) {
        auto u = testutil::rand_elem(A);
        auto v = testutil::rand_elem(A);
        auto w = testutil::rand_elem(A);
        CHECK(u * v == v * u);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK((u + v).trace() == u.trace() + v.trace());
    }
}
