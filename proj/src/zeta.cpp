#include "triherm/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <unordered_map>

namespace triherm {

namespace {

// arithmetic of polynomials of degree < 3 modulo (f, p), coefficients as
// raw residues so that p = 2 works too; p is assumed < 2^31 so products of
// reduced values fit in 64 bits
struct ModCubic {
    std::uint64_t p;
    std::uint64_t f0, f1, f2;  // t^3 = -(f0 + f1 t + f2 t^2) mod p

    std::array<std::uint64_t, 3> mul(const std::array<std::uint64_t, 3>& a,
                                     const std::array<std::uint64_t, 3>& b) const {
        // coefficient convolution, degree <= 4
        std::uint64_t c[5] = {};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        // fold t^4 = -f0 t - f1 t^2 - f2 t^3 first, then t^3
        if (c[4]) {
            c[1] = (c[1] + c[4] * (p - f0)) % p;
            c[2] = (c[2] + c[4] * (p - f1)) % p;
            c[3] = (c[3] + c[4] * (p - f2)) % p;
            c[4] = 0;
        }
        if (c[3]) {
            c[0] = (c[0] + c[3] * (p - f0)) % p;
            c[1] = (c[1] + c[3] * (p - f1)) % p;
            c[2] = (c[2] + c[3] * (p - f2)) % p;
            c[3] = 0;
        }
        return {c[0], c[1], c[2]};
    }

    // t^e modulo (f, p) by binary powering
    std::array<std::uint64_t, 3> power_of_t(std::uint64_t e) const {
        std::array<std::uint64_t, 3> acc{1 % p, 0, 0};
        std::array<std::uint64_t, 3> base{0, 1 % p, 0};
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
};

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) acc = acc * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return acc;
}

// degree of gcd(f, h) over F_p, f monic cubic, deg h <= 2
int gcd_degree_with_cubic(std::uint64_t p, std::uint64_t f0, std::uint64_t f1,
                          std::uint64_t f2, std::array<std::uint64_t, 3> h) {
    // r0 = f (degree 3, monic), r1 = h; standard Euclid on coefficient arrays
    std::vector<std::uint64_t> r0{f0, f1, f2, 1}, r1{h[0], h[1], h[2]};
    auto deg = [](const std::vector<std::uint64_t>& r) {
        for (int d = static_cast<int>(r.size()) - 1; d >= 0; --d)
            if (r[d]) return d;
        return -1;
    };
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) return deg(r0);
        std::uint64_t inv = powmod(r1[d1], p - 2, p);
        int d0 = deg(r0);
        while (d0 >= d1) {
            std::uint64_t q = r0[d0] * inv % p;
            if (q)
                for (int i = 0; i <= d1; ++i) {
                    std::uint64_t sub = q * r1[i] % p;
                    int k = d0 - d1 + i;
                    r0[k] = (r0[k] + p - sub) % p;
                }
            --d0;
            while (d0 >= 0 && r0[d0] == 0) --d0;
        }
        r0.swap(r1);
    }
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace

BigInt IntegerCubic::discriminant() const {
    BigInt e1 = -c2, e2 = c1, e3 = -c0;
    return e1 * e1 * e2 * e2 - 4 * e2 * e2 * e2 - 4 * e1 * e1 * e1 * e3 +
           18 * e1 * e2 * e3 - 27 * e3 * e3;
}

std::uint64_t LocalFactor::ideal_count(std::uint64_t k) const {
    // one prime of norm p^deg per distinct factor (multiplicity only affects
    // ramification, not the count of ideals): partitions of k over the degrees
    std::vector<std::uint64_t> ways(k + 1, 0);
    ways[0] = 1;
    for (const auto& [deg, mult] : factors)
        for (std::uint64_t v = deg; v <= k; ++v) ways[v] += ways[v - deg];
    return ways[k];
}

double LocalFactor::euler_factor(double s) const {
    double val = 1.0;
    for (const auto& [deg, mult] : factors)
        val /= 1.0 - std::pow(double(p), -double(deg) * s);
    return val;
}

std::string LocalFactor::type_string() const {
    switch (type) {
        case SplittingType::Inert: return "(3)";
        case SplittingType::MixedSplit: return "(1)(2)";
        case SplittingType::TotallySplit: return "(1)(1)(1)";
        case SplittingType::Ramified: return "(1^2)(1)";
    }
    return "?";
}

LocalFactor local_factor(std::uint64_t p, const IntegerCubic& f) {
    if (p < 2) throw DataError("local factor needs a prime");
    BigInt disc = f.discriminant();
    if (disc == 0) throw ZeroDiscriminant();
    const bool ramified = disc % BigInt(p) == 0;
    if (ramified && disc % (BigInt(p) * BigInt(p)) == 0)
        throw NonMaximalOrder("discriminant is not squarefree at " +
                              std::to_string(p));

    auto residue = [&](std::int64_t c) {
        std::int64_t r = c % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r);
    };
    ModCubic m{p, residue(f.c0), residue(f.c1), residue(f.c2)};

    // distinct roots of f in F_p = deg gcd(t^p - t, f)
    auto tp = m.power_of_t(p);
    std::array<std::uint64_t, 3> h{tp[0], (tp[1] + p - 1) % p, tp[2]};
    int nroots = gcd_degree_with_cubic(p, m.f0, m.f1, m.f2, h);

    LocalFactor lf;
    lf.p = p;
    switch (nroots) {
        case 0:
            require_internal(!ramified, "rootless cubic at a ramified prime");
            lf.type = SplittingType::Inert;
            lf.factors = {{3, 1}};
            break;
        case 1:
            require_internal(!ramified, "repeated factor hides behind one root");
            lf.type = SplittingType::MixedSplit;
            lf.factors = {{1, 1}, {2, 1}};
            break;
        case 2:
            require_internal(ramified, "two roots of a separable cubic");
            lf.type = SplittingType::Ramified;
            lf.factors = {{1, 2}, {1, 1}};
            break;
        case 3:
            require_internal(!ramified, "three roots at a ramified prime");
            lf.type = SplittingType::TotallySplit;
            lf.factors = {{1, 1}, {1, 1}, {1, 1}};
            break;
        default:
            require_internal(false, "cubic gcd degree out of range");
    }
    return lf;
}

std::vector<std::uint32_t> ideal_count_coefficients(const IntegerCubic& f,
                                                    std::uint64_t N) {
    // smallest prime factor sieve
    std::vector<std::uint32_t> spf(N + 1, 0);
    for (std::uint64_t i = 2; i <= N; ++i) {
        if (spf[i]) continue;
        for (std::uint64_t j = i; j <= N; j += i)
            if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }

    std::unordered_map<std::uint64_t, LocalFactor> memo;
    auto counts_at = [&](std::uint64_t p, std::uint64_t k) {
        auto it = memo.find(p);
        if (it == memo.end()) it = memo.emplace(p, local_factor(p, f)).first;
        return it->second.ideal_count(k);
    };

    std::vector<std::uint32_t> a(N + 1, 0);
    if (N >= 1) a[1] = 1;
    for (std::uint64_t n = 2; n <= N; ++n) {
        std::uint64_t p = spf[n], m = n, k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        a[n] = a[m] * static_cast<std::uint32_t>(counts_at(p, k));
    }
    return a;
}

ZetaEstimate dedekind_zeta(double s, const IntegerCubic& f, std::uint64_t P) {
    if (!(s > 1.0)) throw DataError("zeta truncations need s > 1");
    if (P < 2) throw DataError("prime bound must be at least 2");

    ZetaEstimate est;
    est.euler = 1.0;
    for (std::uint32_t p : primes_up_to(P))
        est.euler *= local_factor(p, f).euler_factor(s);

    auto a = ideal_count_coefficients(f, P);
    double sum = 0;
    for (std::uint64_t n = P; n >= 1; --n)  // small terms first
        if (a[n]) sum += double(a[n]) * std::pow(double(n), -s);
    est.dirichlet = sum;

    est.tail_bound = 3.0 * std::pow(double(P), 1.0 - s) / (s - 1.0);
    return est;
}

double residue_kappa(const FieldInvariants& inv) {
    require_internal(inv.r1 + 2 * inv.r2 == 3, "signature of a cubic field");
    return std::pow(2.0, inv.r1) * std::pow(2.0 * std::numbers::pi, inv.r2) *
           double(inv.class_number) * inv.regulator /
           (double(inv.roots_of_unity) * std::sqrt(double(inv.abs_disc)));
}

double completed_zeta(double s, const FieldInvariants& inv, double zeta_value) {
    const double pi = std::numbers::pi;
    double real_part = std::pow(std::pow(pi, -s / 2) * std::tgamma(s / 2), inv.r1);
    double complex_part =
        std::pow(std::pow(2 * pi, 1 - s) * std::tgamma(s), inv.r2);
    return std::pow(double(inv.abs_disc), s / 2) * real_part * complex_part *
           zeta_value;
}

double completed_residue(const FieldInvariants& inv) {
    return std::sqrt(double(inv.abs_disc)) * residue_kappa(inv);
}

double completed_ratio(double s, const FieldInvariants& inv, double zeta_s,
                       double zeta_s1) {
    return completed_zeta(s, inv, zeta_s) / completed_zeta(s + 1, inv, zeta_s1);
}

VolumeConstants volume_constants(const FieldInvariants& inv, double zeta2) {
    VolumeConstants vc;
    vc.residue_ratio = completed_residue(inv) / completed_zeta(2.0, inv, zeta2);
    vc.group_volume = 1.0 / vc.residue_ratio;
    return vc;
}

}  // namespace triherm
