#pragma once

// ExactScalar: the value domain shared by every sum in the library.
//
// Four kinds, ordered by promotion:
//
//   Integer   arbitrary-precision integer
//   Rational  normalized fraction (gcd 1, positive denominator)
//   Golden    element of Z[phi]
//   Quadratic element a + b*sqrt5 of Q(sqrt5) with rational a, b
//
// Binary operations promote both operands to the smallest kind that holds
// each of them (Rational with Golden lands in Quadratic) and never demote.
// The only way back down is an explicit extraction such as as_integer().

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "fibsum/ring.hpp"

namespace fibsum {

struct Quadratic {
    mpq_class rational;
    mpq_class surd;  // coefficient of sqrt5

    friend bool operator==(const Quadratic& a, const Quadratic& b) {
        return a.rational == b.rational && a.surd == b.surd;
    }
};

class ExactScalar {
public:
    enum class Kind { Integer = 0, Rational = 1, Golden = 2, Quadratic = 3 };

    ExactScalar() : value_(mpz_class(0)) {}
    ExactScalar(long n) : value_(mpz_class(n)) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(int n) : value_(mpz_class(n)) {}   // NOLINT(google-explicit-constructor)
    ExactScalar(mpz_class n) : value_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(mpq_class q);                            // NOLINT(google-explicit-constructor)
    ExactScalar(GoldenInt g) : value_(std::move(g)) {}   // NOLINT(google-explicit-constructor)
    ExactScalar(Quadratic q);                            // NOLINT(google-explicit-constructor)

    static ExactScalar rational(const mpz_class& num, const mpz_class& den);

    Kind kind() const { return static_cast<Kind>(value_.index()); }

    const mpz_class& integer() const { return std::get<mpz_class>(value_); }
    const mpq_class& fraction() const { return std::get<mpq_class>(value_); }
    const GoldenInt& golden() const { return std::get<GoldenInt>(value_); }
    const Quadratic& quadratic() const { return std::get<Quadratic>(value_); }

    // Value of this scalar in a kind at or above its own. Throws
    // std::logic_error on a downward request.
    ExactScalar promoted(Kind target) const;

    bool is_zero() const;

    // Exact integer value regardless of kind; NotRational / NotIntegral otherwise.
    mpz_class as_integer() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend ExactScalar operator-(const ExactScalar& a);

    // Value equality across kinds: Integer 3 == Rational 3/1 == Golden (6,0).
    friend bool operator==(const ExactScalar& a, const ExactScalar& b);
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    // Decimal rendering. Integer "-12", Rational "3/4", Golden "(3+1*sqrt5)/2",
    // Quadratic "1/2+3/10*sqrt5".
    std::string to_string() const;

private:
    std::variant<mpz_class, mpq_class, GoldenInt, Quadratic> value_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

const char* kind_name(ExactScalar::Kind k);

// Smallest kind holding values of both kinds.
ExactScalar::Kind common_kind(ExactScalar::Kind a, ExactScalar::Kind b);

ExactScalar pow(ExactScalar base, std::uint64_t k);

}  // namespace fibsum
