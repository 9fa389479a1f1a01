#pragma once

#include <map>
#include <optional>

#include "kunzlab/exact.hpp"
#include "kunzlab/refdata.hpp"

namespace kunzlab {

enum class Parity { even, odd };

/// Exact counts keyed by an integer statistic.
struct Distribution {
  std::map<int, BigInt> counts;
  BigInt total = 0;

  void add(int key, const BigInt& n);
  Rational probability(int key) const;
  Rational mean() const;
  /// E[(X - mean)^k].
  Rational central_moment(int k) const;
};

/// Bracket for C_0 (even) or C_1 / sqrt(2) (odd): partial sum of the stressed
/// depth-3 series through j_cut plus a geometric tail from the Backelin bound.
ExactBracket backelin_bracket(Parity parity, int j_cut, const Table1& table1);

/// Semigroups with Frobenius number f keyed by f - 2m.
Distribution mult_distribution(int f);

/// Limiting probability that f - 2m equals 2k (even) or 2k + 1 (odd), as an
/// interval driven by the constant's bracket.
ExactBracket limit_mult_mass(int k, Parity parity, const ExactBracket& constant, const Table1& table1);

struct GenusStats {
  Distribution distribution;
  Rational mean;
  /// mean - 3f/4
  Rational mean_deviation;
  Rational variance;
  /// third central moment squared over variance cubed
  Rational skewness_squared;
  Rational kurtosis;
  double skewness() const;
};

GenusStats genus_stats(int f);

/// Semigroups with Frobenius number f of depth at least 4, and the total.
std::pair<BigInt, BigInt> deep_semigroup_share(int f);

enum class SeriesKind { mu0, mu1, gamma0, gamma1 };

/// Interval for mu_i (limit of mean m - f/2) or gamma_i (limit of mean
/// g - 3f/4): series terms through k_cut from exact counts, the remainder
/// bounded with the Backelin bound and j + 2 <= G_j <= 3j.
ExactBracket mu_gamma_partial(SeriesKind kind, int k_cut, const ExactBracket& constant, const Table1& table1);

}  // namespace kunzlab
