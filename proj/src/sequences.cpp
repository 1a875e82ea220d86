#include "fibsum/sequences.hpp"

#include <bit>

#include "fibsum/errors.hpp"

namespace fibsum {

// Doubling step from (F(k), F(k+1)):
//   F(2k)   = F(k) * (2F(k+1) - F(k))
//   F(2k+1) = F(k)^2 + F(k+1)^2
std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n) {
    mpz_class a = 0;  // F(k)
    mpz_class b = 1;  // F(k+1)
    mpz_class t;
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        t = 2 * b - a;
        t *= a;           // F(2k)
        b = b * b + a * a;  // F(2k+1)
        a.swap(t);
        if ((n >> bit) & 1U) {
            t = a + b;
            a.swap(b);
            b.swap(t);
        }
    }
    return {a, b};
}

mpz_class fib(std::uint64_t n) { return fib_pair(n).first; }

mpz_class lucas(std::uint64_t n) {
    auto [f, f1] = fib_pair(n);
    return 2 * f1 - f;
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw DomainError("binomial: n must be non-negative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class q_coeff(std::int64_t n, std::int64_t c) {
    if (n < 0 || c < 0) {
        throw DomainError("q_coeff: n and c must be non-negative");
    }
    mpz_class sum = 0;
    for (std::int64_t m = 0; m <= n; ++m) {
        const std::int64_t k = 2 * m + c + 1;
        if (k > n + 1) {
            break;
        }
        if (m % 2 == 0) {
            sum += binomial(n + 1, k);
        } else {
            sum -= binomial(n + 1, k);
        }
    }
    return sum;
}

mpz_class s_coeff(std::int64_t n, std::int64_t c) {
    mpz_class q = q_coeff(n, c);
    return (n + c) % 2 == 0 ? q : mpz_class(-q);
}

mpz_class gould_alternating_sum(std::int64_t n, std::int64_t m, std::int64_t l) {
    if (m < 0 || n < m) {
        throw DomainError("gould_alternating_sum: need 0 <= m <= n");
    }
    mpz_class sum = 0;
    for (std::int64_t k = 0; k <= m; ++k) {
        mpz_class term = binomial(m, k) * binomial(n - k, l);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

mpq_class gould_reciprocal_sum(std::int64_t n, std::int64_t m) {
    if (m < 1 || n < m) {
        throw DomainError("gould_reciprocal_sum: need 1 <= m <= n");
    }
    mpq_class sum = 0;
    for (std::int64_t j = 0; j <= n - m; ++j) {
        mpq_class term(binomial(n - m, j) * m, mpz_class(m + j));
        term.canonicalize();
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

const char* coeff_kind_name(CoeffKind kind) { return kind == CoeffKind::Q ? "Q" : "S"; }

RecurrenceMismatch::RecurrenceMismatch(CoeffKind kind, std::int64_t n, std::int64_t c,
                                       mpz_class from_recurrence, mpz_class from_definition)
    : std::logic_error(std::string(coeff_kind_name(kind)) + " table entry (" + std::to_string(n) + ", " +
                       std::to_string(c) + "): recurrence gives " + from_recurrence.get_str() +
                       ", definition gives " + from_definition.get_str()),
      kind_(kind),
      n_(n),
      c_(c),
      from_recurrence_(std::move(from_recurrence)),
      from_definition_(std::move(from_definition)) {}

const mpz_class& CoeffTable::at(std::int64_t n, std::int64_t c) const {
    if (n < 0 || n > n_max() || c < 0 || c > n) {
        throw IndexError("CoeffTable::at: (" + std::to_string(n) + ", " + std::to_string(c) +
                         ") outside the triangle of size " + std::to_string(n_max()));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
}

CoeffTable build_coeff_table(CoeffKind kind, std::int64_t n_max) {
    if (n_max < 0) {
        throw DomainError("build_coeff_table: n_max must be non-negative");
    }
    auto definition = [kind](std::int64_t n, std::int64_t c) {
        return kind == CoeffKind::Q ? q_coeff(n, c) : s_coeff(n, c);
    };

    CoeffTable table;
    table.kind_ = kind;
    auto& rows = table.rows_;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    rows.push_back({definition(0, 0)});

    for (std::int64_t n = 0; n < n_max; ++n) {
        const auto& prev = rows.back();
        std::vector<mpz_class> next(static_cast<std::size_t>(n) + 2);
        const auto at = [&prev](std::int64_t c) -> const mpz_class& { return prev[static_cast<std::size_t>(c)]; };
        // prev has entries 0..n; the c = 0 Q-step of row 1 reads q(0, 1),
        // which is 0 by definition.
        const auto at_or_zero = [&](std::int64_t c) { return c <= n ? at(c) : mpz_class(0); };

        for (std::int64_t c = 0; c <= n + 1; ++c) {
            mpz_class value;
            if (kind == CoeffKind::Q) {
                if (c == 0) {
                    value = binomial(n + 1, 0) - at_or_zero(1) + at(0);
                } else if (c <= n) {
                    value = at(c - 1) + at(c);
                } else {
                    value = definition(n + 1, c);
                }
            } else {
                if (c >= 1 && c < n) {
                    value = at(c - 1) - at(c);
                } else {
                    value = definition(n + 1, c);
                }
            }
            next[static_cast<std::size_t>(c)] = std::move(value);
        }

        if (n + 1 <= kCrossCheckRows) {
            for (std::int64_t c = 0; c <= n + 1; ++c) {
                mpz_class direct = definition(n + 1, c);
                if (next[static_cast<std::size_t>(c)] != direct) {
                    throw RecurrenceMismatch(kind, n + 1, c, next[static_cast<std::size_t>(c)], direct);
                }
            }
        }
        rows.push_back(std::move(next));
    }
    return table;
}

}  // namespace fibsum
