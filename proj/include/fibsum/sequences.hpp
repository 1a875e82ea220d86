#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fibsum {

// F(0)=0, F(1)=1. Fast doubling, O(log n) multiplications.
mpz_class fib(std::uint64_t n);

// L(0)=2, L(1)=1. Fast doubling through L(n) = 2F(n+1) - F(n).
mpz_class lucas(std::uint64_t n);

// (F(n), F(n+1)) in one doubling pass.
std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n);

// C(n, k) with C(n, k) = 0 for k < 0 or k > n. n must be non-negative.
mpz_class binomial(std::int64_t n, std::int64_t k);

// q(n, c) = sum_{m=0..n} (-1)^m C(n+1, 2m+c+1), by direct summation.
mpz_class q_coeff(std::int64_t n, std::int64_t c);

// s(n, c) = (-1)^(n+c) q(n, c), by direct summation.
mpz_class s_coeff(std::int64_t n, std::int64_t c);

// Classical binomial sums used as steps in the transform proofs.
//   alternating: sum_{k=0..m} (-1)^k C(m,k) C(n-k,l), equal to C(n-m, l-m)
//   reciprocal:  sum_{j=0..n-m} (-1)^j C(n-m,j) m/(m+j), equal to 1/C(n,n-m)
mpz_class gould_alternating_sum(std::int64_t n, std::int64_t m, std::int64_t l);
mpq_class gould_reciprocal_sum(std::int64_t n, std::int64_t m);

enum class CoeffKind { Q, S };

const char* coeff_kind_name(CoeffKind kind);

// Raised when a recurrence-filled entry disagrees with the direct definition.
class RecurrenceMismatch : public std::logic_error {
public:
    RecurrenceMismatch(CoeffKind kind, std::int64_t n, std::int64_t c, mpz_class from_recurrence,
                       mpz_class from_definition);

    CoeffKind kind() const { return kind_; }
    std::int64_t n() const { return n_; }
    std::int64_t c() const { return c_; }
    const mpz_class& from_recurrence() const { return from_recurrence_; }
    const mpz_class& from_definition() const { return from_definition_; }

private:
    CoeffKind kind_;
    std::int64_t n_;
    std::int64_t c_;
    mpz_class from_recurrence_;
    mpz_class from_definition_;
};

// Triangular table of q(n, c) or s(n, c) for 0 <= c <= n <= n_max.
class CoeffTable {
public:
    CoeffKind kind() const { return kind_; }
    std::int64_t n_max() const { return static_cast<std::int64_t>(rows_.size()) - 1; }

    const mpz_class& at(std::int64_t n, std::int64_t c) const;
    const std::vector<mpz_class>& row(std::int64_t n) const { return rows_.at(static_cast<std::size_t>(n)); }
    const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }

private:
    friend CoeffTable build_coeff_table(CoeffKind kind, std::int64_t n_max);

    CoeffKind kind_ = CoeffKind::Q;
    std::vector<std::vector<mpz_class>> rows_;
};

// Rows past the base row are filled with the recurrences, each applied only
// inside the (n, c) range where it is proven:
//
//   Q: q(n+1, 0) = C(n+1, 0) - q(n, 1) + q(n, 0)          n >= 0
//      q(n+1, c) = q(n, c-1) + q(n, c)                     n >= c >= 1
//   S: s(n+1, c) = s(n, c-1) - s(n, c)                     n >  c >= 1
//
// Every other entry (the diagonal, and the S entries with c = 0 or c >= n)
// comes from the direct definition. Rows up to kCrossCheckRows are also
// compared entry-by-entry with the definition.
CoeffTable build_coeff_table(CoeffKind kind, std::int64_t n_max);

inline constexpr std::int64_t kCrossCheckRows = 20;

}  // namespace fibsum
