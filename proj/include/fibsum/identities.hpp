#pragma once

// Binomial sums of Fibonacci powers and the closed forms printed for them.
//
// Two structurally independent oracles compute sum_k (+-1)^k C(n,k) F(k)^p:
// plain big-integer summation, and a Binet expansion carried out entirely in
// the golden ring. The closed-form evaluators reproduce the printed formulas
// literally (including the doubtful subscripts) so that an audit can tell a
// misprinted formula from an arithmetic bug.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fibsum/ring.hpp"
#include "fibsum/scalar.hpp"

namespace fibsum {

enum class IdentityFamily {
    REMARK1_1,
    REMARK1_2,
    REMARK1_3,
    REMARK1_4,
    REMARK1_5,
    REMARK1_6,
    REMARK1_7,
    REMARK1_8,
    REMARK1_9,
    REMARK1_10,
    REMARK1_11,
    REMARK1_12,
    PROP1_811,
    PROP1_812,
    PROP1_813,
    PROP1_814,
    T2,
    T3,
    T4_EVEN,
    T4_ODD,
    T5,
    T6,
    T7,
    LEMMA5,
    LEMMA7,
};

std::string_view family_name(IdentityFamily f);

// Exact tag names only ("T4_EVEN", "REMARK1_3"); group names are a CLI concern.
std::optional<IdentityFamily> parse_family(std::string_view name);

std::span<const IdentityFamily> all_families();

bool is_remark1(IdentityFamily f);
bool is_prop1(IdentityFamily f);
bool is_theorem(IdentityFamily f);
bool is_lemma_expansion(IdentityFamily f);

// One way of reading a printed formula. Families without ambiguity have a
// single reading with id "printed".
struct Reading {
    std::string_view id;
    std::string_view description;
};

std::span<const Reading> readings(IdentityFamily f);

// Which (n, p) a family is stated for. REMARK1_* ignores n and LEMMA5/LEMMA7
// ignore p; the audit records those as 0.
bool applicable(IdentityFamily f, std::int64_t n, std::int64_t p);

enum class Sign { Plus, Minus };

// Exponent and sign of the Fibonacci-power sum a theorem family evaluates.
struct PowerSum {
    std::int64_t power;
    Sign sign;
};

PowerSum power_sum_of(IdentityFamily theorem, std::int64_t p);

// sum_{k=0..n} (+-1)^k C(n,k) F(k)^p by direct summation.
mpz_class fib_power_sum_oracle(std::int64_t n, std::int64_t p, Sign sign);

// Same value through Binet in the golden ring:
//   (1/sqrt5)^p sum_r C(p,r) (-1)^r (1 +- phi^(p-r) psi^r)^n
// followed by p exact divisions by sqrt5. Uses no Fibonacci numbers at all.
mpz_class fib_power_sum_binet(std::int64_t n, std::int64_t p, Sign sign);

struct GoldenSides {
    GoldenInt lhs;
    GoldenInt rhs;
};

// Relation `index` (1..12) of the twelve phi/psi power relations, at p >= 1:
//   1  x^4p + 1     =  x^2p L(2p)           7  y^4p + 1     =  y^2p L(2p)
//   2  x^4p - 1     =  x^2p r F(2p)         8  y^4p - 1     = -y^2p r F(2p)
//   3  x^(4p-2) + 1 =  x^(2p-1) r F(2p-1)   9  y^(4p-2) + 1 = -y^(2p-1) r F(2p-1)
//   4  x^(4p+2) + 1 =  x^(2p+1) r F(2p+1)   10 y^(4p+2) + 1 = -y^(2p+1) r F(2p+1)
//   5  x^(4p-2) - 1 =  x^(2p-1) L(2p-1)     11 y^(4p-2) - 1 =  y^(2p-1) L(2p-1)
//   6  x^(4p+2) - 1 =  x^(2p+1) L(2p+1)     12 y^(4p+2) - 1 =  y^(2p+1) L(2p+1)
// with x = phi, y = psi, r = sqrt5.
GoldenSides remark1_relation(std::int64_t p, int index);

// Weighted sums sum_k C(n,k) w^k F(k) against their closed forms, where w is
// x^p (811), -x^p (812), y^p (813) or -y^p (814). The closed forms contain
// x^(p-1) and y^(p-1); at p = 0 those are x^-1 = -y and y^-1 = -x.
// Throws NotDivisible if a closed-form numerator is not a multiple of sqrt5.
GoldenSides prop1_eval(std::int64_t n, std::int64_t p, int variant);

// prop1_eval before the final division: rhs holds sqrt5 times the closed form.
GoldenSides prop1_undivided(std::int64_t n, std::int64_t p, int variant);

// Right-hand side of a theorem family exactly as printed, evaluated at (n, p)
// under reading `reading` (index into readings(family)). The value is exact
// in whatever kind the formula produces: an Integer when the printed form
// yields one, otherwise the Rational or Quadratic value it actually denotes.
// DomainError when (n, p) is outside the family's applicability.
ExactScalar closed_form_rhs(IdentityFamily family, std::int64_t n, std::int64_t p, std::size_t reading = 0);

struct ExpansionSides {
    ExactScalar direct;
    ExactScalar expanded;
};

// direct   = sum_{j=0..n} (a+shift)^(n-j) (b+shift)^j
// expanded = sum_{c=1..n} t(n,c) (a^c + b^c) + t(n,0), t = q for shift +1, s for -1.
// PreconditionError unless a*b == -1 and shift is +1 or -1.
ExpansionSides cross_power_expansion(std::int64_t n, const ExactScalar& a, const ExactScalar& b, int shift);

// As above with b = -1/a, which must lie in the ring (a a unit; phi gives psi).
ExpansionSides cross_power_expansion(std::int64_t n, const GoldenInt& a, int shift);

}  // namespace fibsum
