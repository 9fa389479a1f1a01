#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace kunzlab {

/// Arbitrary-precision integer used for every exact count.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
/// Exact rational, always kept in lowest terms.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

BigInt pow_int(const BigInt& base, unsigned exponent);
Rational pow_rat(const Rational& base, unsigned exponent);
inline BigInt pow2(unsigned exponent) { return BigInt(1) << exponent; }

/// Exact integer square root, rounded down.
BigInt isqrt(const BigInt& n);

double to_double(const Rational& x);

enum class Rounding { down, up };

/// Fixed-point rendering of `x` with `digits` fractional digits, rounded in
/// the requested direction (so a lower bound stays a lower bound).
std::string to_decimal(const Rational& x, int digits, Rounding dir);

/// Closed interval of rationals. Invariant: lower <= upper.
struct ExactBracket {
  Rational lower;
  Rational upper;

  ExactBracket() = default;
  ExactBracket(Rational lo, Rational hi);
  static ExactBracket point(const Rational& x) { return {x, x}; }

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  bool contains(const ExactBracket& other) const {
    return lower <= other.lower && other.upper <= upper;
  }
  Rational width() const { return upper - lower; }
  ExactBracket widened(const Rational& slack) const {
    return {lower - slack, upper + slack};
  }
  /// 1/x for a strictly positive bracket.
  ExactBracket reciprocal() const;

  friend ExactBracket operator+(const ExactBracket& a, const ExactBracket& b);
  friend ExactBracket operator*(const ExactBracket& a, const ExactBracket& b);
  friend bool operator==(const ExactBracket&, const ExactBracket&) = default;
};

/// Product of powers `base^exponent` with positive integer bases and rational
/// exponents. Lets bounds such as 2q * c_q^(2d) or t q^t c_q^(l+s+10) be
/// compared without floating point: c_q^x is written as floor((q+2)^2/4)^(x/2).
class PowerProduct {
 public:
  PowerProduct() = default;
  explicit PowerProduct(const BigInt& integer) { times(integer, 1); }

  PowerProduct& times(const BigInt& base, const Rational& exponent);
  PowerProduct& times(const PowerProduct& other);

  const std::vector<std::pair<BigInt, Rational>>& factors() const { return factors_; }
  double log() const;
  double approx() const;

 private:
  std::vector<std::pair<BigInt, Rational>> factors_;
};

/// Exact three-way comparison of two power products: -1, 0 or +1.
int compare(const PowerProduct& lhs, const PowerProduct& rhs);

}  // namespace kunzlab
