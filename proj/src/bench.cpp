#include "fibsum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "fibsum/errors.hpp"

namespace fibsum {

namespace {

template <typename Fn>
double best_seconds(Fn&& fn, double min_seconds) {
    using clock = std::chrono::steady_clock;
    double best = std::numeric_limits<double>::infinity();
    double total = 0.0;
    int runs = 0;
    while (runs < 3 || total < min_seconds) {
        const auto start = clock::now();
        fn();
        const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
        best = std::min(best, elapsed);
        total += elapsed;
        ++runs;
    }
    return best;
}

}  // namespace

bool benchmarkable(IdentityFamily f) { return f == IdentityFamily::T2 || f == IdentityFamily::T3; }

BenchPoint bench_point(IdentityFamily family, std::int64_t n, std::int64_t p, double min_seconds) {
    if (!benchmarkable(family) || !applicable(family, n, p)) {
        throw DomainError("bench_point: " + std::string(family_name(family)) + " cannot be benchmarked at n=" +
                          std::to_string(n) + " p=" + std::to_string(p));
    }
    const PowerSum ps = power_sum_of(family, p);
    BenchPoint point{family, n, p};
    point.equal = ExactScalar(fib_power_sum_oracle(n, ps.power, ps.sign)) == closed_form_rhs(family, n, p);
    if (!point.equal) {
        return point;
    }
    point.oracle_seconds = best_seconds([&] { (void)fib_power_sum_oracle(n, ps.power, ps.sign); }, min_seconds);
    point.closed_seconds = best_seconds([&] { (void)closed_form_rhs(family, n, p); }, min_seconds);
    return point;
}

}  // namespace fibsum
