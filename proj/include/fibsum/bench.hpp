#pragma once

#include <cstdint>

#include "fibsum/identities.hpp"

namespace fibsum {

struct BenchPoint {
    IdentityFamily family;
    std::int64_t n = 0;
    std::int64_t p = 0;
    bool equal = false;            // closed form == direct oracle
    double oracle_seconds = 0.0;   // best time per direct summation
    double closed_seconds = 0.0;   // best time per closed-form evaluation

    double speedup() const { return closed_seconds > 0.0 ? oracle_seconds / closed_seconds : 0.0; }
};

// Whether bench accepts a family: only the theorems whose closed form is a
// fixed number of terms independent of n.
bool benchmarkable(IdentityFamily f);

// Compares the values first; timings are taken only when they agree.
// Each side is timed as the best of repeated runs totalling at least
// min_seconds of work.
BenchPoint bench_point(IdentityFamily family, std::int64_t n, std::int64_t p, double min_seconds = 0.05);

}  // namespace fibsum
