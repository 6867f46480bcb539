#pragma once

// Exhaustive invariant histogram over an integer box: every point with all
// eight coordinates in [-H, H] is evaluated exactly, bucketed by the value
// of the invariant, and the degenerate points are classified by stratum.

#include <cstdint>
#include <map>
#include <vector>

#include "triherm/strata.hpp"

namespace triherm {

struct BoxCountResult {
    std::uint64_t n_total = 0;
    std::map<Rat, std::uint64_t> delta_histogram;     // invariant value -> count
    std::array<std::uint64_t, 4> stratum_counts{};    // indexed by Stratum
};

// A has rational coefficients; they must be integers so the box is a genuine
// sublattice question.  Runs over (2H+1)^8 points, split into `jobs`
// contiguous blocks with summed tallies (result independent of jobs).
BoxCountResult box_count(const Algebra<Rat>& A, int H, int jobs = 1);

}  // namespace triherm
