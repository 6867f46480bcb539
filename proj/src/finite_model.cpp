#include "triherm/finite_model.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>
#include <utility>

namespace triherm {

PointCodec::PointCodec(const Algebra<Fp>& A) : alg_(&A), q_(A.sample().modulus()) {
    for (int i = 0; i < 8; ++i) {
        if (size_ > std::numeric_limits<std::uint64_t>::max() / q_)
            throw CapExceeded("q^8 does not fit in a 64-bit index");
        size_ *= q_;
    }
}

std::array<std::uint32_t, 8> PointCodec::digits(std::uint64_t idx) const {
    std::array<std::uint32_t, 8> d{};
    for (int i = 7; i >= 0; --i) {
        d[i] = static_cast<std::uint32_t>(idx % q_);
        idx /= q_;
    }
    return d;
}

std::uint64_t PointCodec::index_of_digits(const std::array<std::uint32_t, 8>& d) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < 8; ++i) idx = idx * q_ + d[i];
    return idx;
}

Point<Fp> PointCodec::decode(std::uint64_t idx) const {
    auto d = digits(idx);
    const Algebra<Fp>& A = *alg_;
    return Point<Fp>{Fp(d[0], q_),
                     A.elem(Fp(d[1], q_), Fp(d[2], q_), Fp(d[3], q_)),
                     A.elem(Fp(d[4], q_), Fp(d[5], q_), Fp(d[6], q_)),
                     Fp(d[7], q_)};
}

std::uint64_t PointCodec::encode(const Point<Fp>& x) const {
    std::array<std::uint32_t, 8> d{
        static_cast<std::uint32_t>(x.x111.value()),
        static_cast<std::uint32_t>(x.x211.c0.value()),
        static_cast<std::uint32_t>(x.x211.c1.value()),
        static_cast<std::uint32_t>(x.x211.c2.value()),
        static_cast<std::uint32_t>(x.x122.c0.value()),
        static_cast<std::uint32_t>(x.x122.c1.value()),
        static_cast<std::uint32_t>(x.x122.c2.value()),
        static_cast<std::uint32_t>(x.x222.value())};
    return index_of_digits(d);
}

std::string CensusRecord::csv_header() {
    return "q,f,n_total,n_zero,n_ss,n_s1,n_s2";
}

std::string CensusRecord::csv_row() const {
    std::ostringstream os;
    os << q << ",\"" << f[0] << "," << f[1] << "," << f[2] << "\"," << n_total
       << "," << n_zero << "," << n_ss << "," << n_s1 << "," << n_s2;
    return os.str();
}

CensusRecord census(const Algebra<Fp>& A, int jobs,
                    std::vector<std::uint8_t>* labels_out) {
    auto t0 = std::chrono::steady_clock::now();
    if (!A.irreducible()) throw SplitAlgebra();

    PointCodec codec(A);
    const std::uint64_t n = codec.size();
    if (jobs < 1) jobs = 1;
    if (static_cast<std::uint64_t>(jobs) > n) jobs = static_cast<int>(n);
    if (labels_out) labels_out->assign(n, 0);

    struct Tally {
        std::uint64_t zero = 0, ss = 0, s1 = 0, s2 = 0;
    };
    std::vector<Tally> tallies(jobs);
    std::vector<std::exception_ptr> errors(jobs);

    auto work = [&](int b) {
        const std::uint64_t base = n / jobs, rem = n % std::uint64_t(jobs);
        const std::uint64_t lo =
            b * base + std::min<std::uint64_t>(std::uint64_t(b), rem);
        const std::uint64_t hi = lo + base + (std::uint64_t(b) < rem ? 1 : 0);
        try {
            Tally t;
            for (std::uint64_t i = lo; i < hi; ++i) {
                auto rep = classify(codec.decode(i));
                switch (rep.label) {
                    case Stratum::Zero: ++t.zero; break;
                    case Stratum::SemiStable: ++t.ss; break;
                    case Stratum::S1: ++t.s1; break;
                    case Stratum::S2: ++t.s2; break;
                }
                if (labels_out)
                    (*labels_out)[i] = static_cast<std::uint8_t>(rep.label);
            }
            tallies[b] = t;
        } catch (...) {
            errors[b] = std::current_exception();
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int b = 0; b < jobs; ++b) pool.emplace_back(work, b);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    CensusRecord rec;
    rec.q = codec.q();
    rec.f = {A.coef(0).value(), A.coef(1).value(), A.coef(2).value()};
    rec.n_total = n;
    for (const auto& t : tallies) {
        rec.n_zero += t.zero;
        rec.n_ss += t.ss;
        rec.n_s1 += t.s1;
        rec.n_s2 += t.s2;
    }
    require_internal(rec.n_zero == 1, "census saw a second zero point");
    require_internal(rec.n_zero + rec.n_ss + rec.n_s1 + rec.n_s2 == rec.n_total,
                     "census labels do not partition the space");
    rec.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rec;
}

std::uint64_t orbit_bfs(const Point<Fp>& x, std::uint64_t cap) {
    const Algebra<Fp>& A = x.alg();
    PointCodec codec(A);
    if (codec.size() > cap)
        throw CapExceeded("orbit search table would exceed the cap");
    const std::uint64_t q = codec.q();

    using Elem = Algebra<Fp>::Elem;
    std::vector<Elem> all;  // every element of the cubic algebra
    all.reserve(q * q * q);
    for (std::uint64_t a0 = 0; a0 < q; ++a0)
        for (std::uint64_t a1 = 0; a1 < q; ++a1)
            for (std::uint64_t a2 = 0; a2 < q; ++a2)
                all.push_back(A.elem(Fp(a0, q), Fp(a1, q), Fp(a2, q)));

    const Elem one = A.one();
    const Fp f1(1, q);
    std::vector<std::uint8_t> seen(codec.size(), 0);
    std::vector<std::uint64_t> stack;
    stack.push_back(codec.encode(x));
    seen[stack.back()] = 1;
    std::uint64_t count = 1;

    auto push = [&](const Point<Fp>& y) {
        std::uint64_t j = codec.encode(y);
        if (!seen[j]) {
            seen[j] = 1;
            ++count;
            stack.push_back(j);
        }
    };

    while (!stack.empty()) {
        Point<Fp> p = codec.decode(stack.back());
        stack.pop_back();
        push(act_tau(p));
        for (const auto& u : all) push(act_n(u, p));
        for (const auto& t : all)
            if (!t.is_zero()) push(act_diag(f1, t, one, p));
        for (std::uint64_t s = 2; s < q; ++s)
            push(act_diag(Fp(s, q), one, one, p));
    }
    return count;
}

FiniteFunction FiniteFunction::zero(const Algebra<Fp>& A) {
    PointCodec codec(A);
    return {&A, std::vector<std::complex<double>>(codec.size())};
}

FiniteFunction FiniteFunction::constant(const Algebra<Fp>& A,
                                        std::complex<double> c) {
    auto phi = zero(A);
    for (auto& v : phi.values) v = c;
    return phi;
}

FiniteFunction FiniteFunction::point_indicator(const Point<Fp>& x) {
    const Algebra<Fp>& A = x.alg();
    auto phi = zero(A);
    phi.values[PointCodec(A).encode(x)] = 1.0;
    return phi;
}

FiniteFunction compose_with_action(const FiniteFunction& phi,
                                   const GroupElement<Fp>& g) {
    const Algebra<Fp>& A = *phi.alg;
    PointCodec codec(A);
    require_internal(phi.values.size() == codec.size(),
                     "function table has the wrong size");
    auto out = FiniteFunction::zero(A);
    for (std::uint64_t i = 0; i < codec.size(); ++i)
        out.values[i] = phi.values[codec.encode(act(g, codec.decode(i)))];
    return out;
}

FiniteFunction finite_fourier(const FiniteFunction& phi) {
    const Algebra<Fp>& A = *phi.alg;
    PointCodec codec(A);
    const std::uint64_t n = codec.size();
    const std::uint64_t q = codec.q();
    require_internal(phi.values.size() == n, "function table has the wrong size");

    // Gram matrix of the pairing on the unit coordinate points, so that
    // [x, y] = sum_{a,b} gram[a][b] x_a y_b over the 8 base-q digits.
    std::vector<Point<Fp>> basis;
    basis.reserve(8);
    for (std::uint64_t place = n / q; place >= 1; place /= q)
        basis.push_back(codec.decode(place));
    std::array<std::array<std::uint64_t, 8>, 8> gram{};
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            gram[a][b] = pairing(basis[a], basis[b]).value();

    // character table e^{2 pi i r / q}
    std::vector<std::complex<double>> w(q);
    for (std::uint64_t r = 0; r < q; ++r) {
        double t = 2.0 * std::numbers::pi * double(r) / double(q);
        w[r] = {std::cos(t), std::sin(t)};
    }

    // unnormalized character sum along each digit axis:
    // cur(x) = sum_y phi(y) prod_a w[x_a y_a]
    std::vector<std::complex<double>> cur = phi.values, nxt(n);
    for (int axis = 0; axis < 8; ++axis) {
        std::uint64_t stride = 1;
        for (int i = axis + 1; i < 8; ++i) stride *= q;
        const std::uint64_t block = stride * q;
        for (std::uint64_t base0 = 0; base0 < n; base0 += block) {
            for (std::uint64_t inner = 0; inner < stride; ++inner) {
                const std::uint64_t base = base0 + inner;
                for (std::uint64_t k = 0; k < q; ++k) {
                    std::complex<double> acc = 0;
                    for (std::uint64_t r = 0; r < q; ++r)
                        acc += cur[base + r * stride] * w[(k * r) % q];
                    nxt[base + k * stride] = acc;
                }
            }
        }
        std::swap(cur, nxt);
    }

    // relabel through the Gram matrix and normalize:
    // phi_hat(x) = q^{-4} * cur(G x)
    const double norm = 1.0 / (double(q) * double(q) * double(q) * double(q));
    auto out = FiniteFunction::zero(A);
    for (std::uint64_t i = 0; i < n; ++i) {
        auto d = codec.digits(i);
        std::array<std::uint32_t, 8> gd{};
        for (int a = 0; a < 8; ++a) {
            std::uint64_t acc = 0;
            for (int b = 0; b < 8; ++b) acc += gram[a][b] * d[b];
            gd[a] = static_cast<std::uint32_t>(acc % q);
        }
        out.values[i] = norm * cur[codec.index_of_digits(gd)];
    }
    return out;
}

std::complex<double> theta_census(const FiniteFunction& phi,
                                  const GroupElement<Fp>& g, Stratum label,
                                  const std::vector<std::uint8_t>& labels) {
    const Algebra<Fp>& A = *phi.alg;
    PointCodec codec(A);
    require_internal(phi.values.size() == codec.size() &&
                         labels.size() == codec.size(),
                     "table sizes do not match the point space");
    std::complex<double> acc = 0;
    for (std::uint64_t i = 0; i < codec.size(); ++i)
        if (labels[i] == static_cast<std::uint8_t>(label))
            acc += phi.values[codec.encode(act(g, codec.decode(i)))];
    return acc;
}

}  // namespace triherm
