#pragma once

// Exact counting of p-watermelons with wall: Lindstrom-Gessel-Viennot
// determinants with reflection-principle entries, the closed-form product for
// the total count, exact height pmf/moments, and a brute-force enumerator
// used as test oracle.

#include <cstdint>
#include <map>
#include <vector>

#include "melon/bigint.hpp"

namespace melon {

// The ensemble of p-watermelons of length 2n with wall. p >= 1, n >= 0; the
// degenerate n = 0 ensemble has a single (empty) watermelon whose height is
// taken to be 2p-2 by convention.
struct WatermelonSpec {
    int p = 1;
    long n = 1;
};

struct HeightDistribution {
    WatermelonSpec spec;
    std::map<long, Int> counts; // height -> number of watermelons
    Int total;
};

// One watermelon: steps[i][tau] in {+1,-1} is the move of branch i at time
// tau. Branch i runs from height 2i back to 2i, stays >= 0, and branches are
// strictly ordered at every time.
struct PathFamily {
    WatermelonSpec spec;
    std::vector<std::vector<std::int8_t>> steps;
};

// Number of +-1 paths of length len from height a to height b that stay >= 0:
// C(len,(len+b-a)/2) - C(len,(len+a+b)/2+1). Zero on parity mismatch.
Int ballot_count(long a, long b, long len);
Int ballot_count(long a, long b, long len, const BinomialRow& row);

// Total number M_{2n}^{(p)}, via the LGV determinant.
Int count_total(const WatermelonSpec& spec);

// Same count via the closed-form product prod_j C(2n+2j,n)/C(n+2j+1,n).
Int count_total_closed(const WatermelonSpec& spec);

// Number M_{2n,h}^{(p)} of watermelons with height strictly smaller than h.
Int count_bounded(const WatermelonSpec& spec, long h);

HeightDistribution height_pmf(const WatermelonSpec& spec);

// E[H^s] as an exact rational, via the telescoped tail sum
// (1/M) sum_h (h^s-(h-1)^s)(M - M_{2n,h}).
Rat exact_moment(const WatermelonSpec& spec, int s);

// Exact determinant. Rational rows are scaled to integers and eliminated with
// fraction-free Bareiss steps.
Rat det_exact(std::vector<std::vector<Rat>> m);
Int det_exact_int(std::vector<std::vector<Int>> m);

// All watermelons of a small ensemble, in lexicographic order of the step
// matrix flattened time-major (branch 0 first within a time step, with the
// down-step ordered before the up-step). Throws ResourceLimitError when the
// search budget is exceeded.
std::vector<PathFamily> enumerate_all(const WatermelonSpec& spec);

bool is_valid(const PathFamily& fam);

// Max over time of the top branch. Throws DomainError on an invalid family.
long compute_height(const PathFamily& fam);

} // namespace melon
