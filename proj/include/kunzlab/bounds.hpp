#pragma once

#include <string>
#include <vector>

#include "kunzlab/exact.hpp"

namespace kunzlab {

/// c_q = sqrt(floor((q+2)^2 / 4)), kept as the exact integer under the root.
struct CqValue {
  int q;
  BigInt squared;
  double approx;
};

CqValue cq(int q);
BigInt cq_squared(int q);
/// c_q^x as a power product (squared value to the power x/2).
PowerProduct cq_power(int q, const Rational& x);

struct MonotoneReport {
  bool ok = true;
  long comparisons = 0;
  std::string first_violation;
};

/// Checks c_q^(q+r+1) > c_{q+1}^(q+r) for 2 <= q <= q_max and every r in
/// r_grid, and that F(t) = (c_q^t c_{q-1}^(1-t))^(1/(q+t-r)) strictly
/// decreases along t_grid for 3 <= q <= q_max. Every comparison is exact.
MonotoneReport check_c_monotone(int q_max, const std::vector<Rational>& r_grid,
                                const std::vector<Rational>& t_grid);

/// Pair-counting bound on stressed depth-3 words: 8^((j-1)/2) for odd j,
/// 2 * 8^((j-2)/2) for even j.
BigInt stressed3_naive_bound(int length);
/// 2^floor((3l-3)/2) * (11/12)^floor((l-1)/2).
Rational stressed3_backelin_bound(int length);

struct Stressed3Bounds {
  BigInt naive;
  Rational backelin;
};
Stressed3Bounds stressed3_upper_bounds(int length);

/// ((q^2 + 3q - 2) / 2)^(j-1): the square of the pair-counting bound on
/// stressed depth-q words of length j.
BigInt stressed_naive_bound_squared(int depth, int length);

/// q^l: every depth-capped word lies in [q]^l.
BigInt depth_capped_bound(int length, int depth);
/// f * q^(f/(q-1)) for depth q >= 2.
PowerProduct frobenius_depth_bound(int f, int depth);

/// t q^t c_q^(l + s + 10) with s a rational lower bound on sqrt(l). It never
/// exceeds the bound with sqrt(l) itself.
PowerProduct tail_heavy_bound(int length, int tail, int depth);
/// Rational s <= sqrt(n) within 2^-bits.
Rational sqrt_lower(int n, unsigned bits = 16);

/// 2q * c_q^(2d), an integer.
BigInt kdd_hom_bound(int d, int q);

/// Piecewise growth curve of (#K(f, l))^(1/m) against x = f/m.
double growth_rate(double x);

}  // namespace kunzlab
