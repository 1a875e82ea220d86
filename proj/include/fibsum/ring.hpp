#pragma once

// Exact arithmetic in Z[(1+sqrt5)/2], the ring of integers of Q(sqrt5).
//
// An element is stored as (u + v*sqrt5)/2 with u and v of equal parity. That
// layout keeps sqrt5 itself (u=0, v=2) a first-class element and makes the
// exact division by sqrt5 a cheap divisibility test on u.

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "fibsum/errors.hpp"

namespace fibsum {

class GoldenInt {
public:
    GoldenInt() : u_(0), v_(0) {}

    // Throws std::invalid_argument when u and v differ in parity.
    GoldenInt(mpz_class u, mpz_class v);

    static GoldenInt from_integer(const mpz_class& n) { return GoldenInt(mpz_class(2 * n), mpz_class(0)); }
    static GoldenInt zero() { return GoldenInt(); }
    static GoldenInt one() { return from_integer(1); }
    static GoldenInt phi() { return GoldenInt(1, 1); }
    static GoldenInt psi() { return GoldenInt(1, -1); }
    static GoldenInt sqrt5() { return GoldenInt(0, 2); }

    const mpz_class& u() const { return u_; }
    const mpz_class& v() const { return v_; }

    bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
    bool is_rational() const { return sgn(v_) == 0; }

    GoldenInt& operator+=(const GoldenInt& o);
    GoldenInt& operator-=(const GoldenInt& o);
    GoldenInt& operator*=(const GoldenInt& o);

    friend GoldenInt operator+(GoldenInt a, const GoldenInt& b) { return a += b; }
    friend GoldenInt operator-(GoldenInt a, const GoldenInt& b) { return a -= b; }
    friend GoldenInt operator*(GoldenInt a, const GoldenInt& b) { return a *= b; }
    friend GoldenInt operator-(const GoldenInt& a) { return GoldenInt(mpz_class(-a.u_), mpz_class(-a.v_)); }

    friend bool operator==(const GoldenInt& a, const GoldenInt& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
    friend bool operator!=(const GoldenInt& a, const GoldenInt& b) { return !(a == b); }

    // "(u+v*sqrt5)/2", e.g. "(3+1*sqrt5)/2" for phi^2.
    std::string to_string() const;

private:
    struct Unchecked {};
    GoldenInt(mpz_class u, mpz_class v, Unchecked) : u_(std::move(u)), v_(std::move(v)) {}

    mpz_class u_;
    mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const GoldenInt& a);

GoldenInt ring_mul(const GoldenInt& a, const GoldenInt& b);

// Square-and-multiply; ring_pow(a, 0) == 1. Negative exponents are not part
// of the ring, use conjugate() with phi*psi = -1 instead.
GoldenInt ring_pow(GoldenInt a, std::uint64_t k);

// (u + v*sqrt5)/2 -> (u - v*sqrt5)/2
GoldenInt conjugate(const GoldenInt& a);

// a * conjugate(a), always a rational integer.
mpz_class norm(const GoldenInt& a);

// Returns b with sqrt5 * b == a. Throws NotDivisible when a/sqrt5 leaves the ring.
GoldenInt div_sqrt5(const GoldenInt& a);

// Returns u/2 for an element with v == 0. Throws NotRational when v != 0.
mpz_class to_integer(const GoldenInt& a);

}  // namespace fibsum
