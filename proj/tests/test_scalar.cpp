#include "doctest.h"

#include "fibsum/scalar.hpp"

using fibsum::ExactScalar;
using fibsum::GoldenInt;
using Kind = ExactScalar::Kind;

namespace {

ExactScalar frac(long a, long b) { return ExactScalar::rational(a, b); }

}  // namespace

TEST_CASE("rationals are normalized and collapse nowhere by themselves") {
    const ExactScalar half = frac(2, 4);
    CHECK(half.kind() == Kind::Rational);
    CHECK(half.to_string() == "1/2");
    CHECK(frac(3, -6).to_string() == "-1/2");
    CHECK(frac(4, 2) == ExactScalar(2));
}

TEST_CASE("promotion is upward") {
    CHECK(fibsum::common_kind(Kind::Integer, Kind::Rational) == Kind::Rational);
    CHECK(fibsum::common_kind(Kind::Integer, Kind::Golden) == Kind::Golden);
    CHECK(fibsum::common_kind(Kind::Rational, Kind::Golden) == Kind::Quadratic);
    CHECK(fibsum::common_kind(Kind::Golden, Kind::Quadratic) == Kind::Quadratic);

    CHECK((ExactScalar(1) + frac(1, 2)).kind() == Kind::Rational);
    CHECK((ExactScalar(2) * GoldenInt::phi()).kind() == Kind::Golden);
    CHECK((frac(1, 2) * GoldenInt::phi()).kind() == Kind::Quadratic);
    // An integral result keeps the promoted kind.
    CHECK((frac(1, 2) + frac(1, 2)).kind() == Kind::Rational);
    CHECK((ExactScalar(GoldenInt::phi()) * GoldenInt::psi()).kind() == Kind::Golden);

    CHECK_THROWS_AS(ExactScalar(GoldenInt::phi()).promoted(Kind::Integer), std::logic_error);
}

TEST_CASE("equality compares values across kinds") {
    CHECK(ExactScalar(3) == frac(6, 2));
    CHECK(ExactScalar(3) == ExactScalar(GoldenInt::from_integer(3)));
    CHECK(ExactScalar(GoldenInt::phi()) == ExactScalar(fibsum::Quadratic{mpq_class(1, 2), mpq_class(1, 2)}));
    CHECK(ExactScalar(GoldenInt::phi()) != ExactScalar(GoldenInt::psi()));
    CHECK(frac(1, 2) != ExactScalar(0));
}

TEST_CASE("as_integer") {
    CHECK(frac(10, 5).as_integer() == 2);
    CHECK(ExactScalar(GoldenInt::from_integer(-4)).as_integer() == -4);
    CHECK_THROWS_AS(frac(1, 3).as_integer(), fibsum::NotIntegral);
    CHECK_THROWS_AS(ExactScalar(GoldenInt::phi()).as_integer(), fibsum::NotRational);
}

TEST_CASE("division") {
    CHECK(ExactScalar(1) / ExactScalar(4) == frac(1, 4));
    // 1/phi = -psi = phi - 1
    const ExactScalar inv = ExactScalar(1) / GoldenInt::phi();
    CHECK(inv == ExactScalar(GoldenInt::phi()) - ExactScalar(1));
    CHECK(ExactScalar(GoldenInt::sqrt5()) / GoldenInt::sqrt5() == ExactScalar(1));
    CHECK_THROWS(ExactScalar(1) / ExactScalar(0));
}

TEST_CASE("pow and rendering") {
    CHECK(fibsum::pow(frac(1, 2), 3) == frac(1, 8));
    CHECK(fibsum::pow(ExactScalar(GoldenInt::phi()), 2).to_string() == "(3+1*sqrt5)/2");
    CHECK(fibsum::pow(ExactScalar(7), 0) == ExactScalar(1));
    const ExactScalar q = frac(1, 2) + frac(3, 10) * ExactScalar(GoldenInt::sqrt5());
    CHECK(q.kind() == Kind::Quadratic);
    CHECK(q.to_string() == "1/2+3/10*sqrt5");
    CHECK((ExactScalar(-12)).to_string() == "-12");
}
