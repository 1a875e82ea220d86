#pragma once

// Binomial transform calculus over finite sequences of exact scalars.
//
// Index conventions follow the usual ones: a sequence holds values at
// 0..n, the transform is b(n) = sum_k C(n,k) a(k), and the backward
// difference is (nabla b)(n) = b(n) - b(n-1).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "fibsum/errors.hpp"
#include "fibsum/scalar.hpp"

namespace fibsum {

// Non-empty finite sequence whose elements all share one promoted kind.
class Seq {
public:
    explicit Seq(std::vector<ExactScalar> values);
    Seq(std::initializer_list<ExactScalar> values) : Seq(std::vector<ExactScalar>(values)) {}

    static Seq from_integers(std::span<const mpz_class> values);
    static Seq from_integers(std::span<const long> values);

    std::size_t size() const { return values_.size(); }
    // Largest index, i.e. size() - 1.
    std::int64_t last() const { return static_cast<std::int64_t>(values_.size()) - 1; }
    ExactScalar::Kind kind() const { return values_.front().kind(); }

    const ExactScalar& operator[](std::int64_t i) const { return values_[static_cast<std::size_t>(i)]; }
    const ExactScalar& at(std::int64_t i) const;
    const std::vector<ExactScalar>& values() const { return values_; }

    friend bool operator==(const Seq& a, const Seq& b) { return a.values_ == b.values_; }

private:
    std::vector<ExactScalar> values_;
};

// b(n) = sum_{k<=n} C(n,k) a(k)
Seq binomial_transform(const Seq& a);

// a(n) = sum_{k<=n} C(n,k) (-1)^(n-k) b(k); undoes binomial_transform.
Seq inverse_transform(const Seq& b);

// d(n) = sum_{k<=n} C(n,k) (-1)^(n-k) c(k), the alternating transform that
// pairs with the weight sequence in the product identity. Numerically the
// same map as inverse_transform, kept separate because it plays a different
// role there.
Seq signed_transform(const Seq& c);

// m-fold backward difference at index n by repeated differencing.
// IndexError unless m <= n < size.
ExactScalar nabla_direct(const Seq& b, std::int64_t m, std::int64_t n);

// sum_{k=0..m} C(m,k) (-1)^k b(n-k)
ExactScalar nabla_sum(const Seq& b, std::int64_t m, std::int64_t n);

// sum_j C(n,j) C(j,n-m) (-1)^(n-j) b(j), which equals C(n,m) * nabla^m b(n).
ExactScalar nabla_weighted(const Seq& b, std::int64_t m, std::int64_t n);

// sum_k C(n-m, k-m) a(k), which equals nabla^m of the transform of a at n.
ExactScalar lemma2_lhs(const Seq& a, std::int64_t m, std::int64_t n);

// sum_k C(n,k) C(k,m) a(k), which equals C(n,m) * nabla^m b(n).
ExactScalar lemma2_weighted_lhs(const Seq& a, std::int64_t m, std::int64_t n);

// sum_{k=m..n} C(n,k) C(k,m) (-1)^k / k as an exact rational; equals (-1)^m / m.
// DomainError unless 1 <= m <= n.
ExactScalar lemma3_sum(std::int64_t n, std::int64_t m);

struct ProductSums {
    ExactScalar lhs;    // sum_k C(n,k) a(k) c(k)
    ExactScalar rhs8;   // sum_m C(n,m) d(m) nabla^m b(n)
    ExactScalar rhs81;  // sum_k (-1)^k C(n,k) b(n-k) sum_l C(n-k,l) d(l+k)
};

// Weighted-product identity. b = binomial_transform(a), d = signed_transform(c),
// n = size - 1. LengthMismatch when the sizes differ.
ProductSums theorem1_eval(const Seq& a, const Seq& c);

struct PolynomialSides {
    ExactScalar lhs;
    ExactScalar rhs;
};

// lhs = sum_k C(n,k) e(k) x^k; rhs = sum_j C(n,j) f(j) x^j (1-x)^(n-j)
// with f(j) = sum_{k<=j} C(j,k) e(k). Never divides by (1 - x).
PolynomialSides corollary1_eval(const Seq& e, const ExactScalar& x);

// lhs = sum_k C(n,k) a(k) x^k; rhs = sum_m C(n,m) nabla^m b(n) (x-1)^m.
PolynomialSides corollary2_eval(const Seq& a, const ExactScalar& x);

}  // namespace fibsum
