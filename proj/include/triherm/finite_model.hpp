#pragma once

// Brute-force model over a prime field: exhaustive classification census,
// orbit closure under the full group, and an exact finite Fourier transform
// built on the symmetric pairing.  Everything here is small enough to
// enumerate, which makes this module the ground truth the structural claims
// are checked against.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "triherm/strata.hpp"

namespace triherm {

// Bijection between [0, q^8) and points over F_q.  The index reads the
// coordinates as base-q digits, most significant first, in the order
//   x111, x211.c0, x211.c1, x211.c2, x122.c0, x122.c1, x122.c2, x222
// so that enumeration by index is lexicographic in the coordinates.
class PointCodec {
public:
    explicit PointCodec(const Algebra<Fp>& A);

    std::uint64_t q() const { return q_; }
    std::uint64_t size() const { return size_; }

    std::array<std::uint32_t, 8> digits(std::uint64_t idx) const;
    std::uint64_t index_of_digits(const std::array<std::uint32_t, 8>& d) const;

    Point<Fp> decode(std::uint64_t idx) const;
    std::uint64_t encode(const Point<Fp>& x) const;

private:
    const Algebra<Fp>* alg_;
    std::uint64_t q_ = 0;
    std::uint64_t size_ = 1;
};

struct CensusRecord {
    std::uint64_t q = 0;
    std::array<std::uint64_t, 3> f{};  // monic cubic coefficients c0, c1, c2 as residues
    std::uint64_t n_total = 0;
    std::uint64_t n_zero = 0;
    std::uint64_t n_ss = 0;
    std::uint64_t n_s1 = 0;
    std::uint64_t n_s2 = 0;
    double elapsed_seconds = 0.0;

    static std::string csv_header();  // q,f,n_total,n_zero,n_ss,n_s1,n_s2
    std::string csv_row() const;      // e.g. 3,"2,2,0",6561,1,4320,2184,56
};

// Classifies every one of the q^8 points and tallies the four labels.
// The index range is split into `jobs` contiguous blocks classified in
// parallel; tallies are summed, so the record (and csv_row) are identical
// for every job count.  When labels_out is given it receives one Stratum
// value per index, written in place by the block that owns the index.
CensusRecord census(const Algebra<Fp>& A, int jobs = 1,
                    std::vector<std::uint8_t>* labels_out = nullptr);

// Exact orbit cardinality of x, by breadth-first closure under the
// generating set {tau} u {n(u) : all u} u {diag(t,1) : t != 0} u {scalars}.
// The search keeps a visited table over all q^8 indices, so it refuses to
// start (CapExceeded) when q^8 > cap.
std::uint64_t orbit_bfs(const Point<Fp>& x,
                        std::uint64_t cap = std::uint64_t{1} << 26);

// Complex-valued function on the q^8 points, stored in codec index order.
struct FiniteFunction {
    const Algebra<Fp>* alg = nullptr;
    std::vector<std::complex<double>> values;

    static FiniteFunction zero(const Algebra<Fp>& A);
    static FiniteFunction constant(const Algebra<Fp>& A, std::complex<double> c);
    static FiniteFunction point_indicator(const Point<Fp>& x);
};

// x |-> phi(act(g, x))
FiniteFunction compose_with_action(const FiniteFunction& phi,
                                   const GroupElement<Fp>& g);

// phi_hat(x) = q^{-4} sum_y phi(y) exp(2 pi i [x,y] / q).
// Normalized so the double transform gives x |-> phi(-x) and sum|phi_hat|^2
// equals sum|phi|^2; transforming phi(act(g, .)) gives phi_hat(act(dual g, .)).
FiniteFunction finite_fourier(const FiniteFunction& phi);

// sum of phi(act(g, x)) over the points x of one stratum, using the label
// table produced by census.
std::complex<double> theta_census(const FiniteFunction& phi,
                                  const GroupElement<Fp>& g, Stratum label,
                                  const std::vector<std::uint8_t>& labels);

}  // namespace triherm
