#include "fibsum/transforms.hpp"

#include <string>

#include "fibsum/sequences.hpp"

namespace fibsum {

namespace {

void require_index(const Seq& s, std::int64_t m, std::int64_t n, const char* who) {
    if (m < 0 || n < m || n > s.last()) {
        throw IndexError(std::string(who) + ": need 0 <= m <= n < len, got m=" + std::to_string(m) +
                         " n=" + std::to_string(n) + " len=" + std::to_string(s.size()));
    }
}

ExactScalar signed_binomial(std::int64_t n, std::int64_t k, bool negative) {
    mpz_class c = binomial(n, k);
    if (negative) {
        c = -c;
    }
    return ExactScalar(std::move(c));
}

Seq alternating_transform(const Seq& s) {
    std::vector<ExactScalar> out;
    out.reserve(s.size());
    for (std::int64_t n = 0; n <= s.last(); ++n) {
        ExactScalar acc;
        for (std::int64_t k = 0; k <= n; ++k) {
            acc += signed_binomial(n, k, (n - k) % 2 != 0) * s[k];
        }
        out.push_back(std::move(acc));
    }
    return Seq(std::move(out));
}

}  // namespace

Seq::Seq(std::vector<ExactScalar> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw LengthMismatch("Seq: a sequence holds at least one value");
    }
    auto kind = values_.front().kind();
    for (const auto& v : values_) {
        kind = common_kind(kind, v.kind());
    }
    for (auto& v : values_) {
        if (v.kind() != kind) {
            v = v.promoted(kind);
        }
    }
}

Seq Seq::from_integers(std::span<const mpz_class> values) {
    return Seq(std::vector<ExactScalar>(values.begin(), values.end()));
}

Seq Seq::from_integers(std::span<const long> values) {
    return Seq(std::vector<ExactScalar>(values.begin(), values.end()));
}

const ExactScalar& Seq::at(std::int64_t i) const {
    if (i < 0 || i > last()) {
        throw IndexError("Seq::at: index " + std::to_string(i) + " outside 0.." + std::to_string(last()));
    }
    return values_[static_cast<std::size_t>(i)];
}

Seq binomial_transform(const Seq& a) {
    std::vector<ExactScalar> out;
    out.reserve(a.size());
    for (std::int64_t n = 0; n <= a.last(); ++n) {
        ExactScalar acc;
        for (std::int64_t k = 0; k <= n; ++k) {
            acc += ExactScalar(binomial(n, k)) * a[k];
        }
        out.push_back(std::move(acc));
    }
    return Seq(std::move(out));
}

Seq inverse_transform(const Seq& b) { return alternating_transform(b); }

Seq signed_transform(const Seq& c) { return alternating_transform(c); }

ExactScalar nabla_direct(const Seq& b, std::int64_t m, std::int64_t n) {
    require_index(b, m, n, "nabla_direct");
    // window holds b(n-m..n); each pass shortens it by one.
    std::vector<ExactScalar> window(b.values().begin() + (n - m), b.values().begin() + n + 1);
    for (std::int64_t pass = 0; pass < m; ++pass) {
        for (std::size_t i = window.size() - 1; i > 0; --i) {
            window[i] -= window[i - 1];
        }
        window.erase(window.begin());
    }
    return window.back();
}

ExactScalar nabla_sum(const Seq& b, std::int64_t m, std::int64_t n) {
    require_index(b, m, n, "nabla_sum");
    ExactScalar acc;
    for (std::int64_t k = 0; k <= m; ++k) {
        acc += signed_binomial(m, k, k % 2 != 0) * b[n - k];
    }
    return acc;
}

ExactScalar nabla_weighted(const Seq& b, std::int64_t m, std::int64_t n) {
    require_index(b, m, n, "nabla_weighted");
    ExactScalar acc;
    for (std::int64_t j = 0; j <= n; ++j) {
        mpz_class w = binomial(n, j) * binomial(j, n - m);
        if ((n - j) % 2 != 0) {
            w = -w;
        }
        acc += ExactScalar(std::move(w)) * b[j];
    }
    return acc;
}

ExactScalar lemma2_lhs(const Seq& a, std::int64_t m, std::int64_t n) {
    require_index(a, m, n, "lemma2_lhs");
    ExactScalar acc;
    for (std::int64_t k = m; k <= n; ++k) {
        acc += ExactScalar(binomial(n - m, k - m)) * a[k];
    }
    return acc;
}

ExactScalar lemma2_weighted_lhs(const Seq& a, std::int64_t m, std::int64_t n) {
    require_index(a, m, n, "lemma2_weighted_lhs");
    ExactScalar acc;
    for (std::int64_t k = m; k <= n; ++k) {
        acc += ExactScalar(mpz_class(binomial(n, k) * binomial(k, m))) * a[k];
    }
    return acc;
}

ExactScalar lemma3_sum(std::int64_t n, std::int64_t m) {
    if (m < 1 || m > n) {
        throw DomainError("lemma3_sum: need 1 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    mpq_class acc = 0;
    for (std::int64_t k = m; k <= n; ++k) {
        mpq_class term(binomial(n, k) * binomial(k, m), mpz_class(k));
        term.canonicalize();
        if (k % 2 != 0) {
            acc -= term;
        } else {
            acc += term;
        }
    }
    return ExactScalar(std::move(acc));
}

ProductSums theorem1_eval(const Seq& a, const Seq& c) {
    if (a.size() != c.size()) {
        throw LengthMismatch("theorem1_eval: sequences of length " + std::to_string(a.size()) + " and " +
                             std::to_string(c.size()));
    }
    const std::int64_t n = a.last();
    const Seq b = binomial_transform(a);
    const Seq d = signed_transform(c);

    ProductSums out;
    for (std::int64_t k = 0; k <= n; ++k) {
        out.lhs += ExactScalar(binomial(n, k)) * a[k] * c[k];
    }
    for (std::int64_t m = 0; m <= n; ++m) {
        out.rhs8 += ExactScalar(binomial(n, m)) * d[m] * nabla_sum(b, m, n);
    }
    // The inner bound is n-k: C(n-k, l) vanishes past it.
    for (std::int64_t k = 0; k <= n; ++k) {
        ExactScalar inner;
        for (std::int64_t l = 0; l <= n - k; ++l) {
            inner += ExactScalar(binomial(n - k, l)) * d[l + k];
        }
        out.rhs81 += signed_binomial(n, k, k % 2 != 0) * b[n - k] * inner;
    }
    return out;
}

PolynomialSides corollary1_eval(const Seq& e, const ExactScalar& x) {
    const std::int64_t n = e.last();
    const Seq f = binomial_transform(e);  // f(j) = sum_{k<=j} C(j,k) e(k)
    const ExactScalar one_minus_x = ExactScalar(1) - x;

    PolynomialSides out;
    for (std::int64_t k = 0; k <= n; ++k) {
        out.lhs += ExactScalar(binomial(n, k)) * e[k] * pow(x, static_cast<std::uint64_t>(k));
    }
    for (std::int64_t j = 0; j <= n; ++j) {
        out.rhs += ExactScalar(binomial(n, j)) * f[j] * pow(x, static_cast<std::uint64_t>(j)) *
                   pow(one_minus_x, static_cast<std::uint64_t>(n - j));
    }
    return out;
}

PolynomialSides corollary2_eval(const Seq& a, const ExactScalar& x) {
    const std::int64_t n = a.last();
    const Seq b = binomial_transform(a);
    const ExactScalar x_minus_one = x - ExactScalar(1);

    PolynomialSides out;
    for (std::int64_t k = 0; k <= n; ++k) {
        out.lhs += ExactScalar(binomial(n, k)) * a[k] * pow(x, static_cast<std::uint64_t>(k));
    }
    for (std::int64_t m = 0; m <= n; ++m) {
        out.rhs += ExactScalar(binomial(n, m)) * nabla_sum(b, m, n) * pow(x_minus_one, static_cast<std::uint64_t>(m));
    }
    return out;
}

}  // namespace fibsum
