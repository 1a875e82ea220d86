// One PASS/FAIL line per acceptance criterion. Exit status is 0 only when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fibsum/audit.hpp"
#include "fibsum/bench.hpp"
#include "fibsum/identities.hpp"
#include "fibsum/report.hpp"
#include "fibsum/ring.hpp"
#include "fibsum/sequences.hpp"
#include "fibsum/transforms.hpp"
#include "fibsum/verify.hpp"
#include "oracles.hpp"

using namespace fibsum;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::size_t checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            detail = "first failure: " + what;
        } else if (!cond) {
            detail += "; " + what;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double time_limit;  // seconds, 0 for none
    std::function<Outcome()> body;
};

std::string str(std::int64_t v) { return std::to_string(v); }

Outcome round_trip() {
    Outcome o;
    oracle::SeqGen gen(0xacce'0001);
    for (int trial = 0; trial < 200; ++trial) {
        const Seq a = Seq::from_integers(gen.ints(gen.length(1, 64), 1'000'000));
        o.expect(inverse_transform(binomial_transform(a)) == a, "trial " + str(trial));
    }
    return o;
}

Outcome transform_suites() {
    Outcome o;
    for (const auto& s : run_transform_suites(32)) {
        if (s.name == "gould_3_49" || s.name == "gould_1_41") {
            continue;
        }
        o.checks += s.checks - 1;
        o.expect(s.passed(), s.name + " had " + std::to_string(s.failures) + " failures");
    }
    // Reciprocal-weight sum against (-1)^m / m computed here.
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (std::int64_t m = 1; m <= n; ++m) {
            o.expect(lemma3_sum(n, m) == ExactScalar::rational(m % 2 == 0 ? 1 : -1, m),
                     "lemma3 n=" + str(n) + " m=" + str(m));
        }
    }
    // Product identity on Fibonacci-squares, cross-checked by Pascal rows.
    const auto F = oracle::fibonacci(16);
    const oracle::Binomials C(16);
    for (std::int64_t n = 0; n <= 15; ++n) {
        std::vector<mpz_class> prefix(F.begin(), F.begin() + n + 1);
        const Seq a = Seq::from_integers(prefix);
        mpz_class expected = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
            expected += C(n, k) * F[static_cast<std::size_t>(k)] * F[static_cast<std::size_t>(k)];
        }
        const auto r = theorem1_eval(a, a);
        o.expect(r.lhs == ExactScalar(expected) && r.rhs8 == r.lhs && r.rhs81 == r.lhs, "theorem1 F^2 n=" + str(n));
    }
    return o;
}

Outcome gould() {
    Outcome o;
    const oracle::Binomials C(20);
    for (std::int64_t n = 0; n <= 20; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            for (std::int64_t l = 0; l <= n; ++l) {
                o.expect(gould_alternating_sum(n, m, l) == C(n - m, l - m),
                         "3.49 n=" + str(n) + " m=" + str(m) + " l=" + str(l));
            }
            if (m >= 1) {
                mpq_class expected(mpz_class(1), C(n, n - m));
                expected.canonicalize();
                o.expect(gould_reciprocal_sum(n, m) == expected, "1.41 n=" + str(n) + " m=" + str(m));
            }
        }
    }
    return o;
}

Outcome ring_cross_link() {
    Outcome o;
    const auto F = oracle::fibonacci(500);
    const auto L = oracle::lucas(500);
    for (std::uint64_t n = 0; n <= 200; ++n) {
        o.expect(ring_pow(GoldenInt::phi(), n) == GoldenInt(L[n], F[n]), "phi^" + std::to_string(n));
    }
    for (std::uint64_t n = 0; n <= 500; ++n) {
        o.expect(fib(n) == F[n] && lucas(n) == L[n], "doubling n=" + std::to_string(n));
    }
    return o;
}

Outcome remark1() {
    Outcome o;
    for (std::int64_t p = 1; p <= 12; ++p) {
        for (int index = 1; index <= 12; ++index) {
            const auto r = remark1_relation(p, index);
            o.expect(r.lhs == r.rhs, "p=" + str(p) + " index=" + std::to_string(index));
        }
    }
    if (o.checks != 144) {
        o.ok = false;
        o.detail += "; expected 144 checks";
    }
    return o;
}

Outcome proposition1() {
    Outcome o;
    const auto F = oracle::fibonacci(40);
    for (std::int64_t n = 0; n <= 20; ++n) {
        for (std::int64_t p = 0; p <= 8; ++p) {
            for (int variant = 811; variant <= 814; ++variant) {
                const auto r = prop1_eval(n, p, variant);
                o.expect(r.lhs == r.rhs, "n=" + str(n) + " p=" + str(p) + " variant=" + std::to_string(variant));
            }
        }
        o.expect(prop1_eval(n, 0, 811).rhs == GoldenInt::from_integer(F[static_cast<std::size_t>(2 * n)]),
                 "811 at p=0 is F(2n), n=" + str(n));
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (std::int64_t n = 0; n <= 24; ++n) {
        for (std::int64_t p = 1; p <= 8; ++p) {
            for (Sign sign : {Sign::Plus, Sign::Minus}) {
                const mpz_class direct = fib_power_sum_oracle(n, p, sign);
                const mpz_class binet = fib_power_sum_binet(n, p, sign);
                const mpz_class literal =
                    oracle::fib_power_sum(n, static_cast<unsigned long>(p), sign == Sign::Minus);
                o.expect(direct == binet && direct == literal, "n=" + str(n) + " p=" + str(p));
            }
        }
    }
    return o;
}

Outcome theorem2() {
    Outcome o;
    for (std::int64_t p = 1; p <= 3; ++p) {
        for (std::int64_t n = 0; n <= 20; ++n) {
            const mpz_class expected = oracle::fib_power_sum(n, static_cast<unsigned long>(4 * p), false);
            o.expect(closed_form_rhs(IdentityFamily::T2, n, p) == ExactScalar(expected),
                     "p=" + str(p) + " n=" + str(n));
        }
    }
    o.expect(closed_form_rhs(IdentityFamily::T2, 1, 1) == ExactScalar(1), "(p=1, n=1) -> 1");
    o.expect(closed_form_rhs(IdentityFamily::T2, 2, 1) == ExactScalar(3), "(p=1, n=2) -> 3");
    o.expect(closed_form_rhs(IdentityFamily::T2, 3, 1) == ExactScalar(22), "(p=1, n=3) -> 22");
    return o;
}

Outcome qs_machinery() {
    Outcome o;
    const oracle::Binomials C(24);
    auto q = [&C](std::int64_t n, std::int64_t c) { return oracle::q(C, n, c); };
    auto s = [&C](std::int64_t n, std::int64_t c) { return oracle::s(C, n, c); };
    std::vector<std::int64_t> printed_c0_failures;
    for (std::int64_t n = 0; n <= 20; ++n) {
        for (std::int64_t c = 0; c <= n; ++c) {
            o.expect(q_coeff(n, c) == q(n, c) && s_coeff(n, c) == s(n, c), "definition n=" + str(n));
            if (c >= 1) {
                o.expect(q(n + 1, c) == q(n, c - 1) + q(n, c), "q first recurrence n=" + str(n) + " c=" + str(c));
            }
            o.expect(q(n + 1, c) == C(n + 1, c) - q(n, c + 1) + q(n, c),
                     "q second recurrence n=" + str(n) + " c=" + str(c));
            if (c >= 1 && c < n) {
                o.expect(s(n + 1, c) == s(n, c - 1) - s(n, c), "s difference rule n=" + str(n) + " c=" + str(c));
                const mpz_class sign = (n - c + 1) % 2 == 0 ? 1 : -1;
                o.expect(s(n + 1, c) == sign * C(n + 1, c) - s(n, c + 1) - s(n, c),
                         "s binomial rule n=" + str(n) + " c=" + str(c));
            }
        }
        // c = 0 rule as printed: s(n+1,0) = s(n,1) - s(n,0) + (-1)^(n+1) C(n+1,0).
        const mpz_class sign = (n + 1) % 2 == 0 ? 1 : -1;
        const bool holds = s(n + 1, 0) == s(n, 1) - s(n, 0) + sign * C(n + 1, 0);
        ++o.checks;
        if (!holds) {
            printed_c0_failures.push_back(n);
        }
    }
    for (auto kind : {CoeffKind::Q, CoeffKind::S}) {
        const auto table = build_coeff_table(kind, 20);
        for (std::int64_t n = 0; n <= 20; ++n) {
            for (std::int64_t c = 0; c <= n; ++c) {
                o.expect(table.at(n, c) == (kind == CoeffKind::Q ? q(n, c) : s(n, c)), "table n=" + str(n));
            }
        }
    }
    for (std::int64_t n = 0; n <= 20; ++n) {
        for (int shift : {1, -1}) {
            const auto golden = cross_power_expansion(n, GoldenInt::phi(), shift);
            o.expect(golden.direct == golden.expanded, "expansion (phi, psi) n=" + str(n));
            for (long t = 1; t <= 3; ++t) {
                const auto r = cross_power_expansion(n, ExactScalar(t), ExactScalar::rational(-1, t), shift);
                o.expect(r.direct == r.expanded, "expansion (t, -1/t) n=" + str(n) + " t=" + std::to_string(t));
            }
        }
    }
    if (!printed_c0_failures.empty()) {
        std::ostringstream os;
        os << "printed c=0 rule for s(n+1,0) disagrees with the definition at " << printed_c0_failures.size()
           << " of 21 rows (n=" << printed_c0_failures.front() << ".." << printed_c0_failures.back()
           << "; e.g. n=1: s(2,0)=" << s(2, 0).get_str() << ", rule gives "
           << mpz_class(s(1, 1) - s(1, 0) + 1).get_str() << ")";
        o.ok = false;
        o.detail = os.str() + (o.detail.empty() ? "" : "; " + o.detail);
    }
    return o;
}

Outcome theorem_audit() {
    Outcome o;
    const std::vector<IdentityFamily> fams{IdentityFamily::T3, IdentityFamily::T4_EVEN, IdentityFamily::T4_ODD,
                                           IdentityFamily::T5,  IdentityFamily::T6,      IdentityFamily::T7};
    auto render = [](const AuditReport& r) {
        std::ostringstream os;
        write_audit_report(r, OutputFormat::Json, os);
        write_audit_report(r, OutputFormat::Csv, os);
        return os.str();
    };
    const AuditReport first = audit(fams, {0, 16}, {0, 8}, false);
    const AuditReport again = audit(fams, {0, 16}, {0, 8}, false);
    const AuditReport parallel = audit(fams, {0, 16}, {0, 8}, true);
    o.expect(render(first) == render(again), "rerun is not byte-identical");
    o.expect(render(first) == render(parallel), "parallel run is not byte-identical");
    o.expect(!first.has_engine_error(), "oracles disagree");
    for (const auto& e : first.entries) {
        if (e.verdict == Verdict::Fail) {
            o.expect(e.lhs != e.rhs && !e.note.empty() && !e.lhs.to_string().empty() && !e.rhs.to_string().empty(),
                     "FAIL entry without values");
        }
    }
    // Every reading of every applicable cell is present.
    std::size_t expected = 0;
    for (auto f : fams) {
        for (std::int64_t p = 0; p <= 8; ++p) {
            for (std::int64_t n = 0; n <= 16; ++n) {
                if (applicable(f, n, p)) {
                    expected += readings(f).size();
                }
            }
        }
    }
    o.expect(first.entries.size() == expected, "missing readings");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(first.entries.size()) + " entries, " +
                std::to_string(first.pass_count()) + " PASS, " + std::to_string(first.fail_count()) + " FAIL";
    return o;
}

Outcome bench_sanity() {
    Outcome o;
    const BenchPoint pt = bench_point(IdentityFamily::T2, 1024, 1, 0.2);
    o.expect(pt.equal, "closed form differs from summation");
    o.expect(pt.speedup() >= 10.0, "speedup below 10x");
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << "speedup " << pt.speedup() << "x";
    o.detail += (o.detail.empty() ? "" : "; ") + os.str();
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "transform round trip, 200 sequences of length <= 64", 5, round_trip},
        {2, "difference, product and polynomial identities up to n = 32", 30, transform_suites},
        {3, "alternating and reciprocal binomial identities, n <= 20", 5, gould},
        {4, "phi^n = (L(n) + F(n) sqrt5)/2 to 200, fast doubling to 500", 5, ring_cross_link},
        {5, "twelve golden-ratio power relations, p <= 12", 0, remark1},
        {6, "phi/psi-weighted Fibonacci sums, all four variants, n <= 20, p <= 8", 0, proposition1},
        {7, "direct and Binet oracles agree, n <= 24, p <= 8", 0, oracle_equivalence},
        {8, "fourth-power closed form, p in 1..3, n <= 20", 0, theorem2},
        {9, "q/s recurrences and cross-power expansions, n <= 20", 0, qs_machinery},
        {10, "closed forms T3-T7 audited byte-stably over every reading, n <= 16", 0, theorem_audit},
        {11, "T2 closed form >= 10x faster than summation at n = 1024", 60, bench_sanity},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && secs >= c.time_limit) {
            o.ok = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
        }
        failed += o.ok ? 0 : 1;
        std::printf("%s  C%-2d %s [%zu checks, %.2fs]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, o.checks, secs,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
    }
    std::printf("%zu/%zu criteria PASS\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
