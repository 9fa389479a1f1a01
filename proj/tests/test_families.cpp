#include <doctest.h>

#include <map>

#include "kunzlab/engine.hpp"
#include "kunzlab/families.hpp"
#include "oracles.hpp"

using namespace kunzlab;

TEST_CASE("stressed depth-3 counts") {
  const long first[] = {1, 2, 7, 14, 50, 96, 343};
  for (int len = 1; len <= 7; ++len) CHECK(count_stressed3(len) == first[len - 1]);
  for (int len = 1; len <= 11; ++len) {
    long n = 0, genus = 0;
    oracle::for_each_box_word(len, 3, [&](const std::vector<int>& w) {
      if (w.back() == 3 && oracle::kunz(w)) {
        ++n;
        for (int e : w) genus += e;
      }
    });
    CHECK(count_stressed3(len) == n);
    CHECK(stressed3_genus_sum(len) == genus);
    CHECK(stressed3_avg_genus(len) == Rational(genus, n));
  }
  CHECK_THROWS(count_stressed3(63));
}

TEST_CASE("depth 2 and 3 closed forms") {
  for (int f = 1; f <= 18; ++f)
    for (int len = 1; len <= f; ++len) {
      CountQuery q;
      q.frobenius = f;
      q.length = len;
      q.depth_exact = 2;
      CHECK(closed_k2(f, len) == count(q, {1, false}));
      q.depth_exact = 3;
      CHECK(closed_k3(f, len) == count(q, {1, false}));
    }
  CHECK(closed_k2(7, 3) == 4);
  CHECK(closed_k2(7, 6) == 0);
}

TEST_CASE("MED counts match the minimal-generator oracle") {
  for (int f = 1; f <= 15; ++f) {
    std::map<int, long> by_depth;
    long total = 0;
    for (const auto& s : oracle::semigroups_with_frobenius(f))
      if (s.med()) {
        ++by_depth[s.depth];
        ++total;
      }
    CHECK(med_count(f) == total);
    CHECK(med_count(f, std::nullopt, MedRoute::via_contains) == total);
    for (int q = 1; q <= f + 1; ++q) {
      CHECK(med_count(f, q) == by_depth[q]);
      CHECK(med_count(f, q, MedRoute::via_contains) == by_depth[q]);
    }
  }
}

TEST_CASE("depth-2 MED count as a sum of Frobenius counts") {
  for (int f = 3; f <= 18; ++f) {
    long sum = 0;
    for (int k = 1; k <= (f - 1) / 2; ++k) sum += static_cast<long>(oracle::semigroups_with_frobenius(k).size());
    CHECK(med2_partial_frobenius_sum(f) == sum);
  }
}

TEST_CASE("lower-bound family") {
  for (int q = 3; q <= 5; ++q)
    for (int len = 1; len <= 7; ++len)
      for (int j = 1; j <= len; ++j) {
        const auto fam = lower_bound_family(q, len, j);
        const long f = static_cast<long>(len + 1) * (q - 1) + j;
        long n = 0;
        fam.for_each([&](std::span<const int> w) {
          const std::vector<int> v(w.begin(), w.end());
          CHECK(oracle::kunz(v));
          CHECK(oracle::frobenius_of(v) == f);
          CHECK(*std::max_element(v.begin(), v.end()) == q);
          for (int i = 1; i <= len; ++i) {
            const auto [lo, hi] = fam.interval(i);
            CHECK(lo <= v[i - 1]);
            CHECK(v[i - 1] <= hi);
          }
          ++n;
        });
        CHECK(fam.product_count() == n);
        CHECK(fam.formula_count() == n);
      }
  CHECK_THROWS(lower_bound_family(2, 4, 1));
  CHECK_THROWS(lower_bound_family(3, 4, 5));
}

TEST_CASE("Schur colourings") {
  CHECK(schur_colorings(0) == 1);
  for (int n = 1; n <= 9; ++n) CHECK(schur_colorings(n) == oracle::schur(n));
  for (int n = 1; n <= 12; ++n) {
    CountQuery q;
    q.length = n;
    q.depth_max = 3;
    CHECK(schur_colorings(n) == count(q));
  }
}

TEST_CASE("tail-heavy words") {
  for (int len = 1; len <= 8; ++len)
    for (int t = 1; t <= len; ++t)
      for (int q = 2; q <= 3; ++q) {
        const auto spec = TailHeavySpec::make(len, t, q);
        CHECK(spec.min_heavy == oracle::isqrt(len) + 1);
        CHECK(tail_heavy_count(spec) == oracle::tail_heavy(len, t, q));
        long direct = 0;
        oracle::for_each_box_word(len, q, [&](const std::vector<int>& w) { direct += is_tail_heavy(w, spec); });
        CHECK(direct == oracle::tail_heavy(len, t, q));
      }
}
