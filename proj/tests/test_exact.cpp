#include <doctest.h>

#include "kunzlab/exact.hpp"

using namespace kunzlab;

TEST_CASE("integer helpers") {
  CHECK(pow_int(3, 4) == 81);
  CHECK(pow_int(7, 0) == 1);
  CHECK(pow2(70) == BigInt("1180591620717411303424"));
  CHECK(pow_rat(Rational(2, 3), 3) == Rational(8, 27));
  for (int n = 0; n < 2000; ++n) {
    const BigInt r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("directed decimal rendering") {
  const Rational third(1, 3);
  CHECK(to_decimal(third, 4, Rounding::down) == "0.3333");
  CHECK(to_decimal(third, 4, Rounding::up) == "0.3334");
  CHECK(to_decimal(Rational(-1, 3), 2, Rounding::down) == "-0.34");
  CHECK(to_decimal(Rational(-1, 3), 2, Rounding::up) == "-0.33");
  CHECK(to_decimal(Rational(5, 2), 0, Rounding::down) == "2");
  CHECK(to_decimal(Rational(1, 4), 2, Rounding::up) == "0.25");
}

TEST_CASE("bracket arithmetic keeps the true value inside") {
  const ExactBracket a(Rational(1, 2), Rational(3, 4));
  const ExactBracket b(Rational(-1), Rational(2));
  const ExactBracket sum = a + b;
  CHECK(sum.lower == Rational(-1, 2));
  CHECK(sum.upper == Rational(11, 4));
  const ExactBracket prod = a * b;
  CHECK(prod.lower == Rational(-3, 4));
  CHECK(prod.upper == Rational(3, 2));
  const ExactBracket inv = a.reciprocal();
  CHECK(inv.lower == Rational(4, 3));
  CHECK(inv.upper == 2);
  CHECK_THROWS(b.reciprocal());
  CHECK(a.widened(Rational(1, 4)).contains(Rational(1)));
  CHECK_FALSE(a.contains(Rational(1)));
}

TEST_CASE("power products compare exactly") {
  PowerProduct six_cubed(216), two_eighth(256);
  CHECK(compare(six_cubed, two_eighth) < 0);
  // 6^(1/8) vs 2^(1/3)
  PowerProduct lhs, rhs;
  lhs.times(6, Rational(1, 8));
  rhs.times(2, Rational(1, 3));
  CHECK(compare(lhs, rhs) < 0);
  CHECK(compare(rhs, lhs) > 0);
  // sqrt(8) == 2 * sqrt(2)
  PowerProduct root8, two_root2;
  root8.times(8, Rational(1, 2));
  two_root2.times(2, 1).times(2, Rational(1, 2));
  CHECK(compare(root8, two_root2) == 0);
  // shared bases cancel
  PowerProduct big1, big2;
  big1.times(3, 100).times(2, 1);
  big2.times(3, 100).times(5, Rational(1, 2));
  CHECK(compare(big1, big2) < 0);
  CHECK(std::abs(big1.log() - (100 * std::log(3.0) + std::log(2.0))) < 1e-9);
}
