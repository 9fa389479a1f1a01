#include "kunzlab/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kunzlab/count_query.hpp"
#include "kunzlab/engine.hpp"
#include "kunzlab/families.hpp"

namespace kunzlab {

void Distribution::add(int key, const BigInt& n) {
  if (n == 0) return;
  counts[key] += n;
  total += n;
}

Rational Distribution::probability(int key) const {
  if (total == 0) throw std::domain_error("empty distribution");
  auto it = counts.find(key);
  return it == counts.end() ? Rational(0) : Rational(it->second, total);
}

Rational Distribution::mean() const {
  if (total == 0) throw std::domain_error("empty distribution");
  BigInt s = 0;
  for (const auto& [k, n] : counts) s += n * k;
  return Rational(s, total);
}

Rational Distribution::central_moment(int k) const {
  const Rational mu = mean();
  Rational s = 0;
  for (const auto& [key, n] : counts) s += pow_rat(Rational(key) - mu, static_cast<unsigned>(k)) * Rational(n);
  return s / Rational(total);
}

namespace {

const Rational kRatio(11, 12);

const BigInt& stressed_count(const Table1& table1, int j) {
  auto it = table1.find(j);
  if (it == table1.end()) throw std::out_of_range("no reference count for length " + std::to_string(j));
  return it->second;
}

// sum_{k >= from} r^(k-1)
Rational geometric_tail(int from) { return pow_rat(kRatio, static_cast<unsigned>(from - 1)) / (1 - kRatio); }

// sum_{k >= from} k r^(k-1)
Rational weighted_tail(int from) {
  const Rational one_minus = 1 - kRatio;
  return Rational(from) * pow_rat(kRatio, static_cast<unsigned>(from - 1)) / one_minus +
         pow_rat(kRatio, static_cast<unsigned>(from)) / (one_minus * one_minus);
}

}  // namespace

ExactBracket backelin_bracket(Parity parity, int j_cut, const Table1& table1) {
  if (j_cut < 0) throw std::invalid_argument("j_cut must be nonnegative");
  const int extent = table1.empty() ? 0 : table1.rbegin()->first;
  if (j_cut > extent) throw std::out_of_range("j_cut beyond reference data (" + std::to_string(extent) + ")");
  Rational lower(1, 2);
  const int first = parity == Parity::even ? 2 : 1;
  for (int j = first; j <= j_cut; j += 2) {
    // even: K(j) 2^(-3j/2) / 2, odd: K(j) 2^(-(3j+1)/2) / 2
    const unsigned shift = parity == Parity::even ? 3 * j / 2 + 1 : (3 * j + 1) / 2 + 1;
    lower += Rational(stressed_count(table1, j), pow2(shift));
  }
  // Each dropped term is at most r^k / 8 (k = (j-2)/2 even, (j-1)/2 odd);
  // summed from the first dropped index that is (3/2) r^k0.
  int next = j_cut + 1;
  if ((next % 2 == 0) != (parity == Parity::even)) ++next;
  const int k0 = parity == Parity::even ? (next - 2) / 2 : (next - 1) / 2;
  const Rational tail = Rational(3, 2) * pow_rat(kRatio, static_cast<unsigned>(k0));
  return {lower, lower + tail};
}

Distribution mult_distribution(int f) {
  if (f < 1) throw std::invalid_argument("mult_distribution needs f >= 1");
  Distribution d;
  for (int len = 1; len <= f; ++len) {
    CountQuery q;
    q.frobenius = f;
    q.length = len;
    d.add(f - 2 * (len + 1), count(q));
  }
  return d;
}

ExactBracket limit_mult_mass(int k, Parity parity, const ExactBracket& constant, const Table1& table1) {
  const ExactBracket inv = constant.reciprocal();
  Rational weight;
  if (k < 0) {
    weight = Rational(1, pow2(static_cast<unsigned>(1 - k)));
  } else if (parity == Parity::even) {
    if (k == 0) return ExactBracket::point(0);
    weight = Rational(stressed_count(table1, 2 * k), pow2(static_cast<unsigned>(3 * k + 1)));
  } else {
    weight = Rational(stressed_count(table1, 2 * k + 1), pow2(static_cast<unsigned>(3 * k + 3)));
  }
  return inv * ExactBracket::point(weight);
}

double GenusStats::skewness() const {
  const double mag = std::sqrt(to_double(skewness_squared));
  const Rational m3 = distribution.central_moment(3);
  return m3 < 0 ? -mag : mag;
}

GenusStats genus_stats(int f) {
  if (f < 1) throw std::invalid_argument("genus_stats needs f >= 1");
  std::map<int, std::uint64_t> hist;
  CountQuery q;
  q.frobenius = f;
  for_each_word(q, [&](std::span<const int> w) {
    int g = 0;
    for (int e : w) g += e;
    ++hist[g];
  });
  GenusStats s;
  for (const auto& [g, n] : hist) s.distribution.add(g, BigInt(n));
  s.mean = s.distribution.mean();
  s.mean_deviation = s.mean - Rational(3 * f, 4);
  s.variance = s.distribution.central_moment(2);
  const Rational m3 = s.distribution.central_moment(3);
  const Rational m4 = s.distribution.central_moment(4);
  if (s.variance > 0) {
    s.skewness_squared = m3 * m3 / (s.variance * s.variance * s.variance);
    s.kurtosis = m4 / (s.variance * s.variance);
  }
  return s;
}

std::pair<BigInt, BigInt> deep_semigroup_share(int f) {
  CountQuery all;
  all.frobenius = f;
  const BigInt total = count(all);
  BigInt shallow = 0;
  for (int depth = 1; depth <= 3; ++depth) {
    CountQuery q = all;
    q.depth_exact = depth;
    shallow += count(q);
  }
  return {total - shallow, total};
}

ExactBracket mu_gamma_partial(SeriesKind kind, int k_cut, const ExactBracket& constant, const Table1& table1) {
  if (k_cut < 1) throw std::invalid_argument("k_cut must be at least 1");
  const bool even = kind == SeriesKind::mu0 || kind == SeriesKind::gamma0;
  const bool genus = kind == SeriesKind::gamma0 || kind == SeriesKind::gamma1;
  if (genus && (even ? 2 * k_cut : 2 * k_cut + 1) > 40) throw std::out_of_range("k_cut too large for exact average genus");

  // Depth-2 part in closed form.
  Rational head = even ? (genus ? Rational(1, 4) : Rational(1)) : (genus ? Rational(1, 8) : Rational(3, 4));
  Rational partial = 0;
  const int k_first = even ? 1 : 0;
  for (int k = k_first; k <= k_cut; ++k) {
    const int j = even ? 2 * k : 2 * k + 1;
    // share of depth-3 semigroups with f - 2m = j, times C
    const Rational share(stressed_count(table1, j), pow2(static_cast<unsigned>(even ? 3 * k + 1 : 3 * k + 3)));
    Rational value;  // contribution to m - f/2 or g - 3f/4
    if (!genus) {
      value = Rational(-j, 2);
    } else {
      const Rational g = stressed3_avg_genus(j);
      value = even ? (4 * g - 18 * k - 6) / 4 : (4 * g - 18 * k - 15) / 4;
    }
    partial += share * value;
  }

  const int from = k_cut + 1;
  // Remainder: share <= r^(k-1) / 8 (even) or r^k / 8 (odd), and value lies
  // in a range linear in k from the Backelin bound and j + 2 <= G_j <= 3j.
  // sums of r^e and k r^e over k >= from, e = k-1 (even) or k (odd)
  const Rational geo = even ? geometric_tail(from) : kRatio * geometric_tail(from);
  const Rational lin = even ? weighted_tail(from) : kRatio * weighted_tail(from);
  Rational tail_lo, tail_hi;
  if (!genus) {
    // value = -k (even), -(2k+1)/2 (odd); always negative
    tail_lo = even ? -lin / 8 : -(2 * lin + geo) / 16;
    tail_hi = 0;
  } else if (even) {
    // (4G - 18k - 6)/4 in [(-10k + 2)/4, (6k - 6)/4]
    tail_lo = (-10 * lin + 2 * geo) / 32;
    tail_hi = (6 * lin - 6 * geo) / 32;
  } else {
    // (4G - 18k - 15)/4 in [(-10k - 3)/4, (6k - 3)/4]
    tail_lo = (-10 * lin - 3 * geo) / 32;
    tail_hi = (6 * lin - 3 * geo) / 32;
  }
  if (tail_lo > 0) tail_lo = 0;
  if (tail_hi < 0) tail_hi = 0;
  const ExactBracket series(head + partial + tail_lo, head + partial + tail_hi);
  return constant.reciprocal() * series;
}

}  // namespace kunzlab
