#include "fibsum/ring.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fibsum {

namespace {

bool same_parity(const mpz_class& a, const mpz_class& b) {
    return mpz_odd_p(a.get_mpz_t()) == mpz_odd_p(b.get_mpz_t());
}

mpz_class half(const mpz_class& x) {
    mpz_class r;
    mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), 2);
    return r;
}

}  // namespace

GoldenInt::GoldenInt(mpz_class u, mpz_class v) : u_(std::move(u)), v_(std::move(v)) {
    if (!same_parity(u_, v_)) {
        throw std::invalid_argument("GoldenInt: u and v must have equal parity, got u=" + u_.get_str() +
                                    " v=" + v_.get_str());
    }
}

GoldenInt& GoldenInt::operator+=(const GoldenInt& o) {
    u_ += o.u_;
    v_ += o.v_;
    return *this;
}

GoldenInt& GoldenInt::operator-=(const GoldenInt& o) {
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
}

// (u1 + v1 r)(u2 + v2 r)/4 = ((u1 u2 + 5 v1 v2) + (u1 v2 + u2 v1) r)/4, r = sqrt5.
// Both numerators are even whenever the operands satisfy the parity invariant.
GoldenInt& GoldenInt::operator*=(const GoldenInt& o) {
    mpz_class nu = u_ * o.u_ + 5 * v_ * o.v_;
    mpz_class nv = u_ * o.v_ + v_ * o.u_;
    u_ = half(nu);
    v_ = half(nv);
    return *this;
}

std::string GoldenInt::to_string() const {
    std::ostringstream os;
    os << '(' << u_.get_str() << (sgn(v_) < 0 ? "-" : "+") << mpz_class(abs(v_)).get_str() << "*sqrt5)/2";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenInt& a) { return os << a.to_string(); }

GoldenInt ring_mul(const GoldenInt& a, const GoldenInt& b) { return a * b; }

GoldenInt ring_pow(GoldenInt a, std::uint64_t k) {
    GoldenInt result = GoldenInt::one();
    while (k != 0) {
        if (k & 1U) {
            result *= a;
        }
        k >>= 1U;
        if (k != 0) {
            a *= a;
        }
    }
    return result;
}

GoldenInt conjugate(const GoldenInt& a) { return GoldenInt(a.u(), mpz_class(-a.v())); }

mpz_class norm(const GoldenInt& a) {
    mpz_class n = a.u() * a.u() - 5 * a.v() * a.v();
    mpz_class r;
    mpz_divexact_ui(r.get_mpz_t(), n.get_mpz_t(), 4);
    return r;
}

// (u + v r)/2 / r = (5v + u r)/10, so the quotient is (v + (u/5) r)/2 and
// exists exactly when 5 | u. Parity carries over because 5 is odd.
GoldenInt div_sqrt5(const GoldenInt& a) {
    if (!mpz_divisible_ui_p(a.u().get_mpz_t(), 5)) {
        throw NotDivisible("div_sqrt5: " + a.to_string() + " is not sqrt5 times a ring element");
    }
    mpz_class w;
    mpz_divexact_ui(w.get_mpz_t(), a.u().get_mpz_t(), 5);
    return GoldenInt(a.v(), w);
}

mpz_class to_integer(const GoldenInt& a) {
    if (!a.is_rational()) {
        throw NotRational("to_integer: " + a.to_string() + " has a nonzero sqrt5 component");
    }
    if (mpz_odd_p(a.u().get_mpz_t())) {
        // unreachable while the parity invariant holds
        throw NotIntegral("to_integer: " + a.to_string() + " is a half-integer");
    }
    return half(a.u());
}

}  // namespace fibsum
