#include <doctest.h>

#include "vnw/scalar.hpp"

using vnw::Rational;
using vnw::Scalar;

TEST_CASE("rational parsing and printing") {
  CHECK(vnw::parse_rational("3/4") == Rational(3, 4));
  CHECK(vnw::parse_rational("-6/8") == Rational(-3, 4));
  CHECK(vnw::parse_rational("5") == 5);
  CHECK(vnw::to_string(Rational(-3, 4)) == "-3/4");
  CHECK(vnw::to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(vnw::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(vnw::parse_rational(""), std::invalid_argument);
}

TEST_CASE("gaussian rational field operations") {
  Scalar i(Rational(0), Rational(1));
  CHECK(i * i == Scalar(-1));
  Scalar z(Rational(1, 2), Rational(-3, 4));
  CHECK(z * z.conj() == Scalar(z.norm()));
  CHECK((z / z) == Scalar(1));
  Scalar w(Rational(2), Rational(5));
  CHECK((z + w) - w == z);
  CHECK((z * w) / w == z);
  CHECK_THROWS_AS(z / Scalar(0), std::domain_error);
  CHECK(!z.is_real());
  CHECK(Scalar(Rational(3)).is_real());
}

TEST_CASE("scalar printing") {
  CHECK(vnw::to_string(Scalar(Rational(1, 2))) == "1/2");
  CHECK(vnw::to_string(Scalar(Rational(1, 2), Rational(3, 4))) == "1/2+3/4 i");
  CHECK(vnw::to_string(Scalar(Rational(0), Rational(-2))) == "0-2 i");
}

TEST_CASE("scalar powers") {
  CHECK(vnw::scalar_pow(Scalar(Rational(2)), 10) == Scalar(Rational(1024)));
  CHECK(vnw::scalar_pow(Scalar(Rational(2)), -2) == Scalar(Rational(1, 4)));
  Scalar i(Rational(0), Rational(1));
  CHECK(vnw::scalar_pow(i, 4) == Scalar(1));
  CHECK(vnw::rational_pow(Rational(-2), 3) == Rational(-8));
  CHECK(vnw::rational_pow(Rational(3), -2) == Rational(1, 9));
}
