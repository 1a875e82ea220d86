#include "doctest.h"

#include "fibsum/ring.hpp"
#include "fibsum/sequences.hpp"
#include "oracles.hpp"

using fibsum::GoldenInt;

namespace {

GoldenInt g(long u, long v) { return GoldenInt(mpz_class(u), mpz_class(v)); }

// Random ring element with |u|, |v| <= 200 and matching parity.
GoldenInt random_element(oracle::SeqGen& gen) {
    long u = gen.integer(-200, 200);
    long v = gen.integer(-200, 200);
    if ((u - v) % 2 != 0) {
        ++v;
    }
    return g(u, v);
}

}  // namespace

TEST_CASE("construction enforces parity") {
    CHECK_NOTHROW(g(3, 1));
    CHECK_NOTHROW(g(0, 2));
    CHECK_THROWS_AS(g(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g(2, 1), std::invalid_argument);
}

TEST_CASE("ring_mul examples") {
    const GoldenInt phi = GoldenInt::phi();
    const GoldenInt psi = GoldenInt::psi();
    CHECK(fibsum::ring_mul(phi, phi) == g(3, 1));
    CHECK(fibsum::ring_mul(phi, phi) == phi + GoldenInt::one());
    CHECK(fibsum::ring_mul(phi, psi) == g(-2, 0));
    CHECK(fibsum::ring_mul(GoldenInt::one(), g(7, -3)) == g(7, -3));
}

TEST_CASE("ring_pow examples") {
    CHECK(fibsum::ring_pow(GoldenInt::phi(), 0) == g(2, 0));
    CHECK(fibsum::ring_pow(GoldenInt::phi(), 4) == g(7, 3));
    CHECK(fibsum::ring_pow(GoldenInt::psi(), 2) == g(3, -1));
    CHECK(fibsum::ring_pow(GoldenInt::zero(), 0) == GoldenInt::one());
    CHECK(fibsum::ring_pow(GoldenInt::sqrt5(), 2) == GoldenInt::from_integer(5));
}

TEST_CASE("conjugate examples") {
    CHECK(fibsum::conjugate(GoldenInt::phi()) == GoldenInt::psi());
    CHECK(fibsum::conjugate(g(3, 1)) == g(3, -1));
    CHECK(fibsum::conjugate(fibsum::conjugate(g(9, -5))) == g(9, -5));
}

TEST_CASE("div_sqrt5 examples") {
    const GoldenInt phi = GoldenInt::phi();
    const GoldenInt psi = GoldenInt::psi();
    CHECK(fibsum::div_sqrt5(phi - psi) == GoldenInt::one());
    CHECK(fibsum::div_sqrt5(fibsum::ring_pow(phi, 10) - fibsum::ring_pow(psi, 10)) == GoldenInt::from_integer(55));
    CHECK_THROWS_AS(fibsum::div_sqrt5(GoldenInt::one()), fibsum::NotDivisible);
    CHECK(fibsum::div_sqrt5(GoldenInt::from_integer(5)) == GoldenInt::sqrt5());
}

TEST_CASE("to_integer examples") {
    CHECK(fibsum::to_integer(g(6, 0)) == 3);
    CHECK(fibsum::to_integer(GoldenInt::phi() * GoldenInt::psi()) == -1);
    CHECK_THROWS_AS(fibsum::to_integer(GoldenInt::phi()), fibsum::NotRational);
}

TEST_CASE("norm") {
    CHECK(fibsum::norm(GoldenInt::phi()) == -1);
    CHECK(fibsum::norm(GoldenInt::sqrt5()) == -5);
    CHECK(fibsum::norm(g(3, 1)) == 1);
}

TEST_CASE("to_string") {
    CHECK(g(3, 1).to_string() == "(3+1*sqrt5)/2");
    CHECK(g(3, -1).to_string() == "(3-1*sqrt5)/2");
}

TEST_CASE("phi + psi = 1 and phi * psi = -1") {
    CHECK(GoldenInt::phi() + GoldenInt::psi() == GoldenInt::one());
    CHECK(GoldenInt::phi() * GoldenInt::psi() == -GoldenInt::one());
}

TEST_CASE("property: parity closure, conjugate homomorphism, norm integrality") {
    oracle::SeqGen gen(0x7a11);
    for (int i = 0; i < 1000; ++i) {
        const GoldenInt a = random_element(gen);
        const GoldenInt b = random_element(gen);
        const GoldenInt prod = a * b;
        const GoldenInt sum = a + b;
        const GoldenInt diff = a - b;
        for (const GoldenInt* x : {&prod, &sum, &diff}) {
            CHECK(mpz_class(x->u() - x->v()) % 2 == 0);
        }
        CHECK(fibsum::conjugate(prod) == fibsum::conjugate(a) * fibsum::conjugate(b));
        const GoldenInt n = a * fibsum::conjugate(a);
        CHECK(n.v() == 0);
        CHECK(n.u() % 2 == 0);
        CHECK(fibsum::to_integer(n) == fibsum::norm(a));
        CHECK(fibsum::ring_pow(a, 3) == a * a * a);
    }
}

TEST_CASE("property: phi^n = (L(n) + F(n) sqrt5)/2 for n <= 200") {
    const auto F = oracle::fibonacci(200);
    const auto L = oracle::lucas(200);
    GoldenInt power = GoldenInt::one();
    for (std::uint64_t n = 0; n <= 200; ++n) {
        CHECK(fibsum::ring_pow(GoldenInt::phi(), n) == GoldenInt(L[n], F[n]));
        CHECK(power == GoldenInt(L[n], F[n]));
        power *= GoldenInt::phi();
    }
}
