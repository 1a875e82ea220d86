#include "fibsum/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace fibsum {

namespace {

using Kind = ExactScalar::Kind;

Quadratic to_quadratic(const GoldenInt& g) {
    return Quadratic{mpq_class(g.u(), 2), mpq_class(g.v(), 2)};
}

Quadratic q_mul(const Quadratic& a, const Quadratic& b) {
    return Quadratic{a.rational * b.rational + 5 * a.surd * b.surd,
                     a.rational * b.surd + a.surd * b.rational};
}

Quadratic q_inverse(const Quadratic& a) {
    mpq_class n = a.rational * a.rational - 5 * a.surd * a.surd;
    if (sgn(n) == 0) {
        throw DomainError("ExactScalar: division by zero");
    }
    return Quadratic{a.rational / n, -a.surd / n};
}

void canonicalize(mpq_class& q) { q.canonicalize(); }

}  // namespace

ExactScalar::Kind common_kind(ExactScalar::Kind a, ExactScalar::Kind b) {
    // Rational and Golden have no common kind below Quadratic.
    if ((a == Kind::Rational && b == Kind::Golden) || (a == Kind::Golden && b == Kind::Rational)) {
        return Kind::Quadratic;
    }
    return std::max(a, b);
}

ExactScalar::ExactScalar(mpq_class q) : value_(std::move(q)) { canonicalize(std::get<mpq_class>(value_)); }

ExactScalar::ExactScalar(Quadratic q) : value_(std::move(q)) {
    auto& v = std::get<Quadratic>(value_);
    canonicalize(v.rational);
    canonicalize(v.surd);
}

ExactScalar ExactScalar::rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) {
        throw DomainError("ExactScalar: zero denominator");
    }
    return ExactScalar(mpq_class(num, den));
}

ExactScalar ExactScalar::promoted(Kind target) const {
    const Kind k = kind();
    if (k == target) {
        return *this;
    }
    if (target < k || (k == Kind::Rational && target == Kind::Golden)) {
        throw std::logic_error(std::string("ExactScalar: cannot promote ") + kind_name(k) + " to " +
                               kind_name(target));
    }
    switch (target) {
        case Kind::Rational:
            return ExactScalar(mpq_class(integer()));
        case Kind::Golden:
            return ExactScalar(GoldenInt::from_integer(integer()));
        case Kind::Quadratic:
            switch (k) {
                case Kind::Integer:
                    return ExactScalar(Quadratic{mpq_class(integer()), mpq_class(0)});
                case Kind::Rational:
                    return ExactScalar(Quadratic{fraction(), mpq_class(0)});
                case Kind::Golden:
                    return ExactScalar(to_quadratic(golden()));
                default:
                    break;
            }
            break;
        default:
            break;
    }
    throw std::logic_error("ExactScalar: unreachable promotion");
}

bool ExactScalar::is_zero() const {
    switch (kind()) {
        case Kind::Integer:
            return sgn(integer()) == 0;
        case Kind::Rational:
            return sgn(fraction()) == 0;
        case Kind::Golden:
            return golden().is_zero();
        case Kind::Quadratic:
            return sgn(quadratic().rational) == 0 && sgn(quadratic().surd) == 0;
    }
    return false;
}

mpz_class ExactScalar::as_integer() const {
    switch (kind()) {
        case Kind::Integer:
            return integer();
        case Kind::Rational:
            if (fraction().get_den() != 1) {
                throw NotIntegral("as_integer: " + to_string() + " is not an integer");
            }
            return fraction().get_num();
        case Kind::Golden:
            return to_integer(golden());
        case Kind::Quadratic: {
            const auto& q = quadratic();
            if (sgn(q.surd) != 0) {
                throw NotRational("as_integer: " + to_string() + " has a nonzero sqrt5 component");
            }
            if (q.rational.get_den() != 1) {
                throw NotIntegral("as_integer: " + to_string() + " is not an integer");
            }
            return q.rational.get_num();
        }
    }
    throw std::logic_error("ExactScalar: bad kind");
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    const Kind k = common_kind(kind(), o.kind());
    ExactScalar a = promoted(k);
    ExactScalar b = o.promoted(k);
    switch (k) {
        case Kind::Integer:
            std::get<mpz_class>(a.value_) += b.integer();
            break;
        case Kind::Rational:
            std::get<mpq_class>(a.value_) += b.fraction();
            break;
        case Kind::Golden:
            std::get<GoldenInt>(a.value_) += b.golden();
            break;
        case Kind::Quadratic: {
            auto& q = std::get<Quadratic>(a.value_);
            q.rational += b.quadratic().rational;
            q.surd += b.quadratic().surd;
            break;
        }
    }
    *this = std::move(a);
    return *this;
}

ExactScalar operator-(const ExactScalar& a) {
    switch (a.kind()) {
        case Kind::Integer:
            return ExactScalar(mpz_class(-a.integer()));
        case Kind::Rational:
            return ExactScalar(mpq_class(-a.fraction()));
        case Kind::Golden:
            return ExactScalar(-a.golden());
        case Kind::Quadratic:
            return ExactScalar(Quadratic{-a.quadratic().rational, -a.quadratic().surd});
    }
    throw std::logic_error("ExactScalar: bad kind");
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    const Kind k = common_kind(kind(), o.kind());
    ExactScalar a = promoted(k);
    ExactScalar b = o.promoted(k);
    switch (k) {
        case Kind::Integer:
            std::get<mpz_class>(a.value_) *= b.integer();
            break;
        case Kind::Rational:
            std::get<mpq_class>(a.value_) *= b.fraction();
            break;
        case Kind::Golden:
            std::get<GoldenInt>(a.value_) *= b.golden();
            break;
        case Kind::Quadratic:
            a = ExactScalar(q_mul(a.quadratic(), b.quadratic()));
            break;
    }
    *this = std::move(a);
    return *this;
}

// Integer / Integer lands in Rational; anything with a sqrt5 part lands in
// Quadratic, since the ring is not closed under division.
ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) {
        throw DomainError("ExactScalar: division by zero");
    }
    Kind k = common_kind(kind(), o.kind());
    if (k == Kind::Integer) {
        k = Kind::Rational;
    } else if (k == Kind::Golden) {
        k = Kind::Quadratic;
    }
    ExactScalar a = promoted(k);
    ExactScalar b = o.promoted(k);
    if (k == Kind::Rational) {
        *this = ExactScalar(mpq_class(a.fraction() / b.fraction()));
    } else {
        *this = ExactScalar(q_mul(a.quadratic(), q_inverse(b.quadratic())));
    }
    return *this;
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
    const Kind k = common_kind(a.kind(), b.kind());
    ExactScalar pa = a.promoted(k);
    ExactScalar pb = b.promoted(k);
    return pa.value_ == pb.value_;
}

std::string ExactScalar::to_string() const {
    switch (kind()) {
        case Kind::Integer:
            return integer().get_str();
        case Kind::Rational:
            return fraction().get_str();
        case Kind::Golden:
            return golden().to_string();
        case Kind::Quadratic: {
            const auto& q = quadratic();
            std::string s = q.rational.get_str();
            s += sgn(q.surd) < 0 ? "-" : "+";
            s += mpq_class(abs(q.surd)).get_str();
            s += "*sqrt5";
            return s;
        }
    }
    return {};
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

const char* kind_name(ExactScalar::Kind k) {
    switch (k) {
        case Kind::Integer:
            return "Integer";
        case Kind::Rational:
            return "Rational";
        case Kind::Golden:
            return "Golden";
        case Kind::Quadratic:
            return "Quadratic";
    }
    return "?";
}

ExactScalar pow(ExactScalar base, std::uint64_t k) {
    ExactScalar result(1);
    while (k != 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k != 0) {
            base *= base;
        }
    }
    return result;
}

}  // namespace fibsum
