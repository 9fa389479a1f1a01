#include <doctest.h>

#include <map>

#include "kunzlab/engine.hpp"
#include "oracles.hpp"

using namespace kunzlab;

namespace {

CountQuery by_f(int f) {
  CountQuery q;
  q.frobenius = f;
  return q;
}

std::vector<int> entries(const KunzWord& w) { return {w.entries().begin(), w.entries().end()}; }

}  // namespace

TEST_CASE("small totals") {
  // semigroups with Frobenius number 1..10
  const long known[] = {1, 1, 2, 2, 5, 4, 11, 10, 21, 22};
  for (int f = 1; f <= 10; ++f) CHECK(count(by_f(f)) == known[f - 1]);
  CountQuery q = by_f(29);
  q.length = 9;
  CHECK(count(q) == 2249);
}

TEST_CASE("counts and streams agree with the gap-set oracle") {
  for (int f = 1; f <= 16; ++f) {
    const auto all = oracle::semigroups_with_frobenius(f);
    std::map<int, long> by_len, by_depth, med_by_depth;
    std::map<std::vector<int>, int> seen;
    for (const auto& s : all) {
      ++by_len[s.multiplicity - 1];
      ++by_depth[s.depth];
      if (s.med()) ++med_by_depth[s.depth];
      seen[s.word] = 1;
    }
    CHECK(count(by_f(f)) == static_cast<long>(all.size()));
    CHECK(count(by_f(f), {1, false}) == static_cast<long>(all.size()));
    for (int len = 1; len <= f; ++len) {
      CountQuery q = by_f(f);
      q.length = len;
      CHECK(count(q) == by_len[len]);
    }
    for (int depth = 1; depth <= f + 1; ++depth) {
      CountQuery q = by_f(f);
      q.depth_exact = depth;
      CHECK(count(q) == by_depth[depth]);
      q.med = true;
      CHECK(count(q) == med_by_depth[depth]);
    }
    const auto words = enumerate(by_f(f));
    CHECK(words.size() == all.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(seen.count(entries(words[i])) == 1);
      if (i > 0) CHECK(words[i - 1] < words[i]);
    }
  }
}

TEST_CASE("contains filter") {
  for (int f = 3; f <= 14; ++f) {
    const auto all = oracle::semigroups_with_frobenius(f);
    for (int n = 1; n <= f + 2; ++n) {
      long want = 0;
      for (const auto& s : all) want += s.contains(n);
      CountQuery q = by_f(f);
      q.contains = n;
      CHECK(count(q) == want);
    }
  }
}

TEST_CASE("length-only families against box filtering") {
  for (int len = 1; len <= 7; ++len)
    for (int q = 1; q <= 4; ++q) {
      const auto box = oracle::kunz_words_in_box(len, q);
      long capped = static_cast<long>(box.size()), exact = 0, stressed = 0;
      for (const auto& w : box) {
        const int top = *std::max_element(w.begin(), w.end());
        if (top == q) ++exact;
        if (w.back() == q) ++stressed;
      }
      CountQuery cq;
      cq.length = len;
      cq.depth_max = q;
      CHECK(count(cq) == capped);
      CHECK(count(cq, {1, false}) == capped);
      cq.depth_max.reset();
      cq.depth_exact = q;
      CHECK(count(cq) == exact);
      cq.stressed = true;
      CHECK(count(cq) == stressed);
      CHECK(count(cq, {1, false}) == stressed);
      long n = 0;
      CountQuery walk;
      walk.length = len;
      walk.depth_max = q;
      for_each_word(walk, [&](std::span<const int> w) {
        CHECK(oracle::kunz(std::vector<int>(w.begin(), w.end())));
        ++n;
      });
      CHECK(n == capped);
    }
}

TEST_CASE("thread count does not change results or order") {
  CountQuery q = by_f(24);
  const BigInt one = count(q, {1, true});
  CHECK(count(q, {4, true}) == one);
  CHECK(count(q, {16, false}) == one);
  q.length = 8;
  CHECK(count(q, {1, false}) == count(q, {3, false}));
}

TEST_CASE("stream yields lexicographic order across lengths") {
  WordStream s(by_f(9));
  std::optional<KunzWord> prev;
  long n = 0;
  while (auto w = s.next()) {
    if (prev) CHECK(*prev < *w);
    prev = w;
    ++n;
  }
  CHECK(n == 21);
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(count(CountQuery{}), std::invalid_argument);
  CountQuery q;
  q.length = 3;
  CHECK_THROWS_AS(count(q), std::invalid_argument);
  q.stressed = true;
  q.depth_max = 3;
  CHECK_THROWS_AS(count(q), std::invalid_argument);
  CHECK(count(by_f(0)) == 0);
  CHECK(by_f(5).describe() == "f=5");
}
