#include "doctest.h"

#include "fibsum/errors.hpp"
#include "fibsum/ring.hpp"
#include "fibsum/sequences.hpp"
#include "oracles.hpp"

using fibsum::CoeffKind;

TEST_CASE("fib and lucas examples") {
    CHECK(fibsum::fib(0) == 0);
    CHECK(fibsum::fib(10) == 55);
    CHECK(fibsum::fib(20) == 6765);
    CHECK(fibsum::lucas(0) == 2);
    CHECK(fibsum::lucas(1) == 1);
    CHECK(fibsum::lucas(10) == 123);
    auto [f, f1] = fibsum::fib_pair(30);
    CHECK(f == 832040);
    CHECK(f1 == 1346269);
}

TEST_CASE("binomial examples") {
    CHECK(fibsum::binomial(5, 2) == 10);
    for (std::int64_t n = 0; n < 10; ++n) {
        CHECK(fibsum::binomial(n, 0) == 1);
    }
    CHECK(fibsum::binomial(3, 5) == 0);
    CHECK(fibsum::binomial(3, -1) == 0);
    CHECK_THROWS_AS(fibsum::binomial(-1, 0), fibsum::DomainError);
}

TEST_CASE("q and s examples") {
    CHECK(fibsum::q_coeff(1, 0) == 2);
    CHECK(fibsum::q_coeff(1, 1) == 1);
    CHECK(fibsum::q_coeff(2, 1) == 3);
    CHECK(fibsum::q_coeff(2, 1) == fibsum::q_coeff(1, 0) + fibsum::q_coeff(1, 1));
    CHECK(fibsum::s_coeff(1, 0) == -2);
    CHECK(fibsum::s_coeff(1, 1) == 1);
    CHECK(fibsum::s_coeff(2, 1) == -3);
    CHECK(fibsum::s_coeff(2, 1) == fibsum::s_coeff(1, 0) - fibsum::s_coeff(1, 1));
    CHECK(fibsum::s_coeff(0, 0) == 1);
}

TEST_CASE("coefficient tables") {
    const auto q2 = fibsum::build_coeff_table(CoeffKind::Q, 2);
    CHECK(q2.rows() == std::vector<std::vector<mpz_class>>{{1}, {2, 1}, {2, 3, 1}});
    CHECK(fibsum::build_coeff_table(CoeffKind::Q, 0).rows() == std::vector<std::vector<mpz_class>>{{1}});
    // s(0,0) = (-1)^0 q(0,0) = 1.
    CHECK(fibsum::build_coeff_table(CoeffKind::S, 1).rows() == std::vector<std::vector<mpz_class>>{{1}, {-2, 1}});
    CHECK_THROWS_AS(q2.at(3, 0), fibsum::IndexError);
    CHECK_THROWS_AS(q2.at(1, 2), fibsum::IndexError);
    CHECK_THROWS_AS(fibsum::build_coeff_table(CoeffKind::S, -1), fibsum::DomainError);
}

TEST_CASE("property: tables match the definition well past the cross-check rows") {
    const std::int64_t n_max = 60;
    const oracle::Binomials C(n_max + 2);
    const auto q = fibsum::build_coeff_table(CoeffKind::Q, n_max);
    const auto s = fibsum::build_coeff_table(CoeffKind::S, n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t c = 0; c <= n; ++c) {
            CHECK(q.at(n, c) == oracle::q(C, n, c));
            CHECK(s.at(n, c) == oracle::s(C, n, c));
        }
    }
}

TEST_CASE("property: fast doubling equals the recurrence for n <= 500") {
    const auto F = oracle::fibonacci(500);
    const auto L = oracle::lucas(500);
    for (std::uint64_t n = 0; n <= 500; ++n) {
        CHECK(fibsum::fib(n) == F[n]);
        CHECK(fibsum::lucas(n) == L[n]);
    }
}

TEST_CASE("property: Binet forms of fib and lucas for n <= 200") {
    using fibsum::GoldenInt;
    for (std::uint64_t n = 0; n <= 200; ++n) {
        const GoldenInt a = fibsum::ring_pow(GoldenInt::phi(), n);
        const GoldenInt b = fibsum::ring_pow(GoldenInt::psi(), n);
        CHECK(fibsum::to_integer(fibsum::div_sqrt5(a - b)) == fibsum::fib(n));
        CHECK(fibsum::to_integer(a + b) == fibsum::lucas(n));
    }
}

TEST_CASE("property: binomial matches Pascal's rule for n <= 40") {
    const oracle::Binomials C(40);
    for (std::int64_t n = 0; n <= 40; ++n) {
        for (std::int64_t k = -1; k <= n + 1; ++k) {
            CHECK(fibsum::binomial(n, k) == C(n, k));
        }
    }
}

TEST_CASE("property: Gould alternating and reciprocal sums for n <= 20") {
    const oracle::Binomials C(20);
    for (std::int64_t n = 0; n <= 20; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            for (std::int64_t l = 0; l <= n; ++l) {
                CHECK(fibsum::gould_alternating_sum(n, m, l) == C(n - m, l - m));
            }
            if (m >= 1) {
                mpq_class expected(mpz_class(1), C(n, n - m));
                expected.canonicalize();
                CHECK(fibsum::gould_reciprocal_sum(n, m) == expected);
            }
        }
    }
    CHECK_THROWS_AS(fibsum::gould_reciprocal_sum(3, 0), fibsum::DomainError);
    CHECK_THROWS_AS(fibsum::gould_alternating_sum(2, 3, 0), fibsum::DomainError);
}
