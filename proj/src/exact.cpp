#include "kunzlab/exact.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kunzlab {

BigInt pow_int(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational pow_rat(const Rational& base, unsigned exponent) {
  Rational num = pow_int(boost::multiprecision::numerator(base), exponent);
  Rational den = pow_int(boost::multiprecision::denominator(base), exponent);
  return num / den;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_decimal(const Rational& x, int digits, Rounding dir) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  const BigInt scale = pow_int(10, static_cast<unsigned>(digits));
  const BigInt num = boost::multiprecision::numerator(x) * scale;
  const BigInt den = boost::multiprecision::denominator(x);
  // floor division for either sign
  BigInt q = num / den;
  BigInt r = num % den;
  if (r != 0 && num < 0) q -= 1;
  if (r != 0 && dir == Rounding::up) q += 1;

  const bool negative = q < 0;
  const BigInt mag = negative ? BigInt(-q) : q;
  std::string body = mag.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

ExactBracket::ExactBracket(Rational lo, Rational hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower > upper) throw std::invalid_argument("bracket lower bound exceeds upper bound");
}

ExactBracket ExactBracket::reciprocal() const {
  if (lower <= 0) throw std::domain_error("reciprocal of a bracket containing zero");
  return {Rational(1) / upper, Rational(1) / lower};
}

ExactBracket operator+(const ExactBracket& a, const ExactBracket& b) {
  return {a.lower + b.lower, a.upper + b.upper};
}

ExactBracket operator*(const ExactBracket& a, const ExactBracket& b) {
  const Rational p[] = {a.lower * b.lower, a.lower * b.upper, a.upper * b.lower,
                        a.upper * b.upper};
  Rational lo = p[0], hi = p[0];
  for (const auto& v : p) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

PowerProduct& PowerProduct::times(const BigInt& base, const Rational& exponent) {
  if (base < 1) throw std::invalid_argument("power product bases must be positive");
  if (base == 1 || exponent == 0) return *this;
  for (auto& [b, e] : factors_) {
    if (b == base) {
      e += exponent;
      return *this;
    }
  }
  factors_.emplace_back(base, exponent);
  return *this;
}

PowerProduct& PowerProduct::times(const PowerProduct& other) {
  for (const auto& [b, e] : other.factors_) times(b, e);
  return *this;
}

double PowerProduct::log() const {
  double total = 0;
  for (const auto& [b, e] : factors_) {
    // log of a big base without overflowing double
    const auto bits = boost::multiprecision::msb(b);
    double lb;
    if (bits < 1000) {
      lb = std::log(b.convert_to<double>());
    } else {
      const unsigned shift = static_cast<unsigned>(bits) - 60;
      lb = std::log(BigInt(b >> shift).convert_to<double>()) + shift * std::log(2.0);
    }
    total += lb * to_double(e);
  }
  return total;
}

double PowerProduct::approx() const { return std::exp(log()); }

int compare(const PowerProduct& lhs, const PowerProduct& rhs) {
  // Cancel shared bases, move negative exponents across, then clear the
  // common denominator D: compare L^D against R^D as integers.
  PowerProduct quotient = lhs;
  for (const auto& [b, e] : rhs.factors()) quotient.times(b, -e);
  std::vector<std::pair<BigInt, Rational>> left, right;
  for (const auto& [b, e] : quotient.factors()) {
    if (e > 0) left.emplace_back(b, e);
    else if (e < 0) right.emplace_back(b, -e);
  }

  BigInt denom = 1;
  for (const auto* side : {&left, &right})
    for (const auto& [b, e] : *side) {
      const BigInt d = boost::multiprecision::denominator(e);
      denom = denom / boost::multiprecision::gcd(denom, d) * d;
    }

  auto evaluate = [&](const std::vector<std::pair<BigInt, Rational>>& side) {
    BigInt value = 1;
    for (const auto& [b, e] : side) {
      const Rational scaled = e * denom;
      const BigInt k = boost::multiprecision::numerator(scaled);
      if (k > BigInt(1u << 30)) throw std::overflow_error("power product exponent too large");
      value *= pow_int(b, k.convert_to<unsigned>());
    }
    return value;
  };
  const BigInt l = evaluate(left);
  const BigInt r = evaluate(right);
  return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace kunzlab
