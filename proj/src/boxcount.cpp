#include "triherm/boxcount.hpp"

#include <limits>
#include <thread>

#include "triherm/invariant.hpp"

namespace triherm {

namespace {

Point<Rat> box_point(const Algebra<Rat>& A, std::uint64_t idx, int H) {
    const std::uint64_t side = 2 * std::uint64_t(H) + 1;
    std::array<std::int64_t, 8> c{};
    for (int i = 7; i >= 0; --i) {
        c[i] = static_cast<std::int64_t>(idx % side) - H;
        idx /= side;
    }
    return {Rat(c[0]), A.from_ints(c[1], c[2], c[3]),
            A.from_ints(c[4], c[5], c[6]), Rat(c[7])};
}

}  // namespace

BoxCountResult box_count(const Algebra<Rat>& A, int H, int jobs) {
    if (H < 0) throw DataError("box height must be nonnegative");
    for (int i = 0; i < 3; ++i)
        if (!A.coef(i).is_integer())
            throw DataError("box counting needs integer cubic coefficients");

    const std::uint64_t side = 2 * std::uint64_t(H) + 1;
    std::uint64_t n = 1;
    for (int i = 0; i < 8; ++i) {
        if (n > std::numeric_limits<std::uint64_t>::max() / side)
            throw CapExceeded("box too large for a 64-bit index");
        n *= side;
    }

    if (jobs < 1) jobs = 1;
    if (static_cast<std::uint64_t>(jobs) > n) jobs = static_cast<int>(n);

    struct Block {
        std::map<Rat, std::uint64_t> hist;
        std::array<std::uint64_t, 4> strata{};
        std::exception_ptr error;
    };
    std::vector<Block> blocks(jobs);

    auto work = [&](int b) {
        const std::uint64_t base = n / jobs, rem = n % std::uint64_t(jobs);
        const std::uint64_t lo =
            b * base + std::min<std::uint64_t>(std::uint64_t(b), rem);
        const std::uint64_t hi = lo + base + (std::uint64_t(b) < rem ? 1 : 0);
        try {
            for (std::uint64_t i = lo; i < hi; ++i) {
                Point<Rat> x = box_point(A, i, H);
                Rat d = discriminant(x);
                ++blocks[b].hist[d];
                if (d.is_zero()) {
                    auto rep = classify(x);
                    ++blocks[b].strata[static_cast<int>(rep.label)];
                } else {
                    ++blocks[b].strata[static_cast<int>(Stratum::SemiStable)];
                }
            }
        } catch (...) {
            blocks[b].error = std::current_exception();
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

    BoxCountResult res;
    res.n_total = n;
    for (auto& blk : blocks) {
        if (blk.error) std::rethrow_exception(blk.error);
        for (const auto& [d, c] : blk.hist) res.delta_histogram[d] += c;
        for (int i = 0; i < 4; ++i) res.stratum_counts[i] += blk.strata[i];
    }

    std::uint64_t hist_total = 0, strata_total = 0;
    for (const auto& [d, c] : res.delta_histogram) hist_total += c;
    for (auto c : res.stratum_counts) strata_total += c;
    require_internal(hist_total == n && strata_total == n,
                     "box tallies do not cover the box");
    return res;
}

}  // namespace triherm
