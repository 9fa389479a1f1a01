#include "kunzlab/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kunzlab {

BigInt cq_squared(int q) {
  if (q < 1) throw std::invalid_argument("c_q needs q >= 1");
  const BigInt s = BigInt(q + 2) * (q + 2);
  return s / 4;
}

CqValue cq(int q) {
  const BigInt s = cq_squared(q);
  return {q, s, std::sqrt(s.convert_to<double>())};
}

PowerProduct cq_power(int q, const Rational& x) {
  PowerProduct p;
  p.times(cq_squared(q), x / 2);
  return p;
}

namespace {

std::string rat(const Rational& r) { return r.str(); }

}  // namespace

MonotoneReport check_c_monotone(int q_max, const std::vector<Rational>& r_grid,
                                const std::vector<Rational>& t_grid) {
  if (q_max < 3) throw std::invalid_argument("check_c_monotone needs q_max >= 3");
  MonotoneReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.ok) rep.first_violation = what;
    rep.ok = false;
  };
  for (const auto& r : r_grid) {
    if (r < 0 || r > 1) throw std::invalid_argument("r must lie in [0, 1]");
    for (int q = 2; q <= q_max; ++q) {
      ++rep.comparisons;
      if (compare(cq_power(q, q + r + 1), cq_power(q + 1, q + r)) <= 0) {
        std::ostringstream os;
        os << "c_" << q << "^(q+r+1) <= c_" << q + 1 << "^(q+r) at r=" << rat(r);
        fail(os.str());
        return rep;
      }
    }
    for (int q = 3; q <= q_max; ++q) {
      // F(a) > F(b) for a < b, raised to (q+a-r)(q+b-r)
      for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
        const Rational& a = t_grid[i];
        const Rational& b = t_grid[i + 1];
        if (a >= b || a < 0 || b > 1) throw std::invalid_argument("t grid must increase within [0, 1]");
        PowerProduct fa = cq_power(q, a * (q + b - r));
        fa.times(cq_power(q - 1, (1 - a) * (q + b - r)));
        PowerProduct fb = cq_power(q, b * (q + a - r));
        fb.times(cq_power(q - 1, (1 - b) * (q + a - r)));
        ++rep.comparisons;
        if (compare(fa, fb) <= 0) {
          std::ostringstream os;
          os << "F(" << rat(a) << ") <= F(" << rat(b) << ") at q=" << q << " r=" << rat(r);
          fail(os.str());
          return rep;
        }
      }
    }
  }
  return rep;
}

BigInt stressed3_naive_bound(int length) {
  if (length < 1) throw std::invalid_argument("length must be positive");
  if (length % 2) return pow_int(8, static_cast<unsigned>((length - 1) / 2));
  return 2 * pow_int(8, static_cast<unsigned>((length - 2) / 2));
}

Rational stressed3_backelin_bound(int length) {
  if (length < 1) throw std::invalid_argument("length must be positive");
  return Rational(pow2(static_cast<unsigned>((3 * length - 3) / 2))) *
         pow_rat(Rational(11, 12), static_cast<unsigned>((length - 1) / 2));
}

Stressed3Bounds stressed3_upper_bounds(int length) {
  return {stressed3_naive_bound(length), stressed3_backelin_bound(length)};
}

BigInt stressed_naive_bound_squared(int depth, int length) {
  if (depth < 1 || length < 1) throw std::invalid_argument("depth and length must be positive");
  const BigInt pairs = BigInt(depth * depth + 3 * depth - 2) / 2;
  return pow_int(pairs, static_cast<unsigned>(length - 1));
}

BigInt depth_capped_bound(int length, int depth) {
  if (length < 0 || depth < 0) throw std::invalid_argument("negative parameter");
  return pow_int(depth, static_cast<unsigned>(length));
}

PowerProduct frobenius_depth_bound(int f, int depth) {
  if (f < 1 || depth < 2) throw std::invalid_argument("frobenius_depth_bound needs f >= 1 and q >= 2");
  PowerProduct p(f);
  p.times(depth, Rational(f, depth - 1));
  return p;
}

Rational sqrt_lower(int n, unsigned bits) {
  if (n < 0) throw std::invalid_argument("sqrt of a negative number");
  const BigInt scale = pow2(bits);
  return Rational(isqrt(BigInt(n) * scale * scale), scale);
}

PowerProduct tail_heavy_bound(int length, int tail, int depth) {
  if (length < 1 || tail < 1 || depth < 1) throw std::invalid_argument("tail_heavy_bound needs positive parameters");
  PowerProduct p(tail);
  p.times(depth, tail);
  p.times(cq_power(depth, Rational(length) + sqrt_lower(length, 10) + 10));
  return p;
}

BigInt kdd_hom_bound(int d, int q) {
  if (d < 1 || q < 1) throw std::invalid_argument("kdd_hom_bound needs d, q >= 1");
  return 2 * BigInt(q) * pow_int(cq_squared(q), static_cast<unsigned>(d));
}

double growth_rate(double x) {
  if (!(x >= 1)) return 0.0;
  if (x <= 2) return std::pow(2.0, x - 1);
  const int q = static_cast<int>(std::ceil(x));
  const double hi = cq(q).approx, lo = cq(q - 1).approx;
  return std::pow(hi, x - q + 1) * std::pow(lo, q - x);
}

}  // namespace kunzlab
