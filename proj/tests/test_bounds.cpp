#include <doctest.h>

#include <cmath>

#include "kunzlab/bounds.hpp"
#include "kunzlab/engine.hpp"
#include "kunzlab/families.hpp"
#include "kunzlab/graph.hpp"
#include "oracles.hpp"

using namespace kunzlab;

TEST_CASE("c_q values") {
  CHECK(cq_squared(1) == 2);
  CHECK(cq_squared(2) == 4);
  CHECK(cq_squared(3) == 6);
  CHECK(cq_squared(4) == 9);
  CHECK(cq(3).approx == doctest::Approx(std::sqrt(6.0)));
  CHECK(compare(cq_power(4, 2), PowerProduct(9)) == 0);
}

TEST_CASE("c_q monotonicity on a grid") {
  const MonotoneReport r = check_c_monotone(300, {0, Rational(1, 2), 1}, {0, Rational(1, 3), Rational(2, 3), 1});
  CHECK(r.ok);
  CHECK(r.comparisons > 0);
}

TEST_CASE("stressed depth-3 bounds") {
  CHECK(stressed3_naive_bound(1) == 1);
  CHECK(stressed3_naive_bound(2) == 2);
  CHECK(stressed3_naive_bound(3) == 8);
  CHECK(stressed3_naive_bound(4) == 16);
  CHECK(stressed3_backelin_bound(3) == Rational(8 * 11, 12));
  for (int len = 1; len <= 18; ++len) {
    const BigInt k = count_stressed3(len);
    const auto b = stressed3_upper_bounds(len);
    CHECK(Rational(k) <= b.backelin);
    CHECK(b.backelin <= Rational(b.naive));
  }
}

TEST_CASE("generic bounds dominate exact counts") {
  for (int len = 1; len <= 6; ++len)
    for (int q = 1; q <= 4; ++q) CHECK(static_cast<long>(oracle::kunz_words_in_box(len, q).size()) <= depth_capped_bound(len, q));
  for (int f = 2; f <= 16; ++f)
    for (int q = 2; q <= f + 1; ++q) {
      CountQuery cq;
      cq.frobenius = f;
      cq.depth_exact = q;
      const BigInt n = count(cq);
      if (n > 0) CHECK(compare(PowerProduct(n), frobenius_depth_bound(f, q)) <= 0);
    }
  for (int q = 2; q <= 4; ++q)
    for (int j = 1; j <= 7; ++j) {
      long n = 0;
      oracle::for_each_box_word(j, q, [&](const std::vector<int>& w) { n += (w.back() == q && oracle::kunz(w)); });
      CHECK(BigInt(n) * n <= stressed_naive_bound_squared(q, j));
    }
  for (int len = 1; len <= 8; ++len)
    for (int t = 1; t <= len; ++t)
      for (int q = 2; q <= 3; ++q) {
        const long n = oracle::tail_heavy(len, t, q);
        if (n > 0) CHECK(compare(PowerProduct(n), tail_heavy_bound(len, t, q)) <= 0);
      }
}

TEST_CASE("K_dd homomorphism bound") {
  for (int d = 1; d <= 6; ++d)
    for (int q = 1; q <= 8; ++q) CHECK(hom_kdd(d, q) <= kdd_hom_bound(d, q));
  CHECK(kdd_hom_bound(1, 3) == 36);
}

TEST_CASE("rational square-root lower bound") {
  for (int n = 1; n <= 300; ++n) {
    const Rational s = sqrt_lower(n, 12);
    CHECK(s * s <= n);
    CHECK(std::sqrt(static_cast<double>(n)) - to_double(s) < 1.0 / 4096 + 1e-12);
  }
}

TEST_CASE("growth curve") {
  CHECK(growth_rate(0.5) == 0);
  CHECK(growth_rate(1) == doctest::Approx(1));
  CHECK(growth_rate(2) == doctest::Approx(2));
  CHECK(growth_rate(3) == doctest::Approx(std::sqrt(6.0)));
  for (int q = 2; q <= 8; ++q) {
    const double eps = 1e-7;
    CHECK(std::abs(growth_rate(q - eps) - growth_rate(q + eps)) < 1e-5);
  }
  double prev = 0;
  for (double x = 1; x <= 8; x += 0.125) {
    CHECK(growth_rate(x) >= prev);
    prev = growth_rate(x);
  }
}
