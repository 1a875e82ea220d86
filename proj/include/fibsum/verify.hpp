#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibsum {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;

    bool passed() const { return failures == 0; }
};

// Property suites for the transform calculus, each exercised for all indices
// up to n_max on deterministic pseudo-random integer sequences:
//
//   round_trip   inverse and forward transform undo each other
//   lemma1       repeated differencing == alternating binomial sum (and the
//                C(n,m)-weighted form)
//   lemma2       sum_k C(n-m,k-m) a(k) == nabla^m b(n) (and weighted form)
//   lemma3       sum_k C(n,k) C(k,m) (-1)^k / k == (-1)^m / m
//   theorem1     product identity, both right-hand forms
//   corollaries  both polynomial identities at x in {0, 1, -1, 1/2, 2, phi, psi}
//   gould_3_49   alternating binomial convolution
//   gould_1_41   reciprocal binomial sum
//
// Work grows roughly like n_max^4 (lemma1); n_max around 32 runs in seconds.
std::vector<SuiteResult> run_transform_suites(std::int64_t n_max, std::uint64_t seed = 0x5eed'f1b0'0000'0001ULL);

}  // namespace fibsum
