#include "fibsum/verify.hpp"

#include <random>

#include "fibsum/scalar.hpp"
#include "fibsum/sequences.hpp"
#include "fibsum/transforms.hpp"

namespace fibsum {

namespace {

class SuiteCounter {
public:
    explicit SuiteCounter(std::string name) { result_.name = std::move(name); }

    void check(bool ok) {
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

Seq random_seq(std::mt19937_64& rng, std::int64_t length) {
    std::uniform_int_distribution<long> dist(-50, 50);
    std::vector<ExactScalar> values;
    values.reserve(static_cast<std::size_t>(length));
    for (std::int64_t i = 0; i < length; ++i) {
        values.emplace_back(dist(rng));
    }
    return Seq(std::move(values));
}

SuiteResult round_trip(std::mt19937_64& rng, std::int64_t n_max) {
    SuiteCounter suite("round_trip");
    for (std::int64_t len = 1; len <= n_max + 1; ++len) {
        for (int rep = 0; rep < 3; ++rep) {
            const Seq a = random_seq(rng, len);
            suite.check(inverse_transform(binomial_transform(a)) == a);
            suite.check(binomial_transform(inverse_transform(a)) == a);
        }
    }
    return suite.take();
}

SuiteResult lemma1(std::mt19937_64& rng, std::int64_t n_max) {
    SuiteCounter suite("lemma1");
    const Seq b = random_seq(rng, n_max + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            const ExactScalar shorter = nabla_sum(b, m, n);
            suite.check(nabla_direct(b, m, n) == shorter);
            suite.check(nabla_weighted(b, m, n) == ExactScalar(binomial(n, m)) * shorter);
        }
    }
    return suite.take();
}

SuiteResult lemma2(std::mt19937_64& rng, std::int64_t n_max) {
    SuiteCounter suite("lemma2");
    const Seq a = random_seq(rng, n_max + 1);
    const Seq b = binomial_transform(a);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            const ExactScalar nabla = nabla_sum(b, m, n);
            suite.check(lemma2_lhs(a, m, n) == nabla);
            suite.check(lemma2_weighted_lhs(a, m, n) == ExactScalar(binomial(n, m)) * nabla);
        }
    }
    return suite.take();
}

SuiteResult lemma3(std::int64_t n_max) {
    SuiteCounter suite("lemma3");
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t m = 1; m <= n; ++m) {
            suite.check(lemma3_sum(n, m) == ExactScalar(mpq_class(mpz_class(m % 2 == 0 ? 1 : -1), mpz_class(m))));
        }
    }
    return suite.take();
}

SuiteResult theorem1(std::mt19937_64& rng, std::int64_t n_max) {
    SuiteCounter suite("theorem1");
    for (std::int64_t len = 1; len <= n_max + 1; ++len) {
        const Seq a = random_seq(rng, len);
        const Seq c = random_seq(rng, len);
        const ProductSums sums = theorem1_eval(a, c);
        suite.check(sums.lhs == sums.rhs8);
        suite.check(sums.lhs == sums.rhs81);
    }
    return suite.take();
}

SuiteResult corollaries(std::mt19937_64& rng, std::int64_t n_max) {
    SuiteCounter suite("corollaries");
    const std::vector<ExactScalar> points{ExactScalar(0),
                                          ExactScalar(1),
                                          ExactScalar(-1),
                                          ExactScalar(mpq_class(1, 2)),
                                          ExactScalar(2),
                                          ExactScalar(GoldenInt::phi()),
                                          ExactScalar(GoldenInt::psi())};
    for (std::int64_t len = 1; len <= n_max + 1; ++len) {
        const Seq a = random_seq(rng, len);
        for (const auto& x : points) {
            const auto c1 = corollary1_eval(a, x);
            suite.check(c1.lhs == c1.rhs);
            const auto c2 = corollary2_eval(a, x);
            suite.check(c2.lhs == c2.rhs);
        }
    }
    return suite.take();
}

SuiteResult gould_3_49(std::int64_t n_max) {
    SuiteCounter suite("gould_3_49");
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            for (std::int64_t l = 0; l <= n; ++l) {
                suite.check(gould_alternating_sum(n, m, l) == binomial(n - m, l - m));
            }
        }
    }
    return suite.take();
}

SuiteResult gould_1_41(std::int64_t n_max) {
    SuiteCounter suite("gould_1_41");
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t m = 1; m <= n; ++m) {
            suite.check(gould_reciprocal_sum(n, m) == mpq_class(mpz_class(1), binomial(n, n - m)));
        }
    }
    return suite.take();
}

}  // namespace

std::vector<SuiteResult> run_transform_suites(std::int64_t n_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SuiteResult> out;
    out.push_back(round_trip(rng, n_max));
    out.push_back(lemma1(rng, n_max));
    out.push_back(lemma2(rng, n_max));
    out.push_back(lemma3(n_max));
    out.push_back(theorem1(rng, n_max));
    out.push_back(corollaries(rng, n_max));
    out.push_back(gould_3_49(n_max));
    out.push_back(gould_1_41(n_max));
    return out;
}

}  // namespace fibsum
