#include <doctest.h>

#include "kunzlab/kunz_word.hpp"
#include "oracles.hpp"

using namespace kunzlab;

TEST_CASE("parsing and printing") {
  CHECK(KunzWord::parse("3,1,2,2,1") == KunzWord{3, 1, 2, 2, 1});
  CHECK(KunzWord::parse("31221") == KunzWord{3, 1, 2, 2, 1});
  CHECK(KunzWord::parse("12,") == KunzWord{12});
  CHECK(KunzWord{3, 1, 2}.str() == "3,1,2");
  CHECK(KunzWord{3, 1, 2}.compact() == "312");
  CHECK(KunzWord{10, 1}.compact() == "10,1");
  CHECK_THROWS(KunzWord::parse("3,0"));
  CHECK_THROWS(KunzWord::parse("a"));
  CHECK_THROWS(KunzWord::checked({1, 3}));
  CHECK(GapSet::parse("1,2,4") == GapSet{4, 2, 1, 2});
}

TEST_CASE("invariants of small examples") {
  // <3,5,7>
  const KunzWord w{2, 1};
  const auto inv = invariants(w);
  CHECK(inv.multiplicity == 3);
  CHECK(inv.genus == 3);
  CHECK(inv.depth == 2);
  CHECK(inv.frobenius == 4);
  CHECK(gaps_from_word(w) == GapSet{1, 2, 4});
  CHECK(invariants(KunzWord{}).frobenius == -1);
  CHECK(invariants(KunzWord{}).multiplicity == 1);
  CHECK(contains(w, 7));
  CHECK_FALSE(contains(w, 4));
  CHECK(contains(w, 0));
  CHECK(stressed_frobenius(3, 4) == 14);
  CHECK_THROWS(invariants(KunzWord{1, 3}));
}

TEST_CASE("every semigroup with small Frobenius number round-trips") {
  for (int f = 1; f <= 13; ++f) {
    for (const auto& s : oracle::semigroups_with_frobenius(f)) {
      const GapSet gaps(s.gaps);
      CHECK(gaps.is_valid());
      const KunzWord w = word_from_gaps(gaps);
      CHECK(std::vector<int>(w.entries().begin(), w.entries().end()) == s.word);
      CHECK(is_kunz(w));
      CHECK(gaps_from_word(w) == gaps);
      const auto inv = invariants(w);
      CHECK(inv.frobenius == f);
      CHECK(inv.multiplicity == s.multiplicity);
      CHECK(inv.genus == s.genus());
      CHECK(inv.depth == s.depth);
      CHECK(is_med(w) == s.med());
      for (int n = 0; n <= f + 3; ++n) CHECK(contains(w, n) == s.contains(n));
    }
  }
}

TEST_CASE("Kunz test agrees with the direct inequalities on a box") {
  for (int len = 1; len <= 6; ++len)
    oracle::for_each_box_word(len, 4, [&](const std::vector<int>& w) { CHECK(is_kunz(std::span<const int>(w)) == oracle::kunz(w)); });
}

TEST_CASE("depth reduction and MED lift") {
  for (int f = 2; f <= 12; ++f)
    for (const auto& s : oracle::semigroups_with_frobenius(f)) {
      const KunzWord w = word_from_gaps(GapSet(s.gaps));
      if (s.depth >= 2) {
        const KunzWord v = reduce_depth(w);
        CHECK(is_kunz(v));
        CHECK(invariants(v).depth == s.depth - 1);
      }
      const GapSet lifted = med_lift(GapSet(s.gaps), s.multiplicity);
      CHECK(lifted.is_valid());
      CHECK(is_med(word_from_gaps(lifted)));
      CHECK(lifted.frobenius() == f + s.multiplicity);
      const auto [back, m] = med_drop(lifted);
      CHECK(m == s.multiplicity);
      CHECK(back == GapSet(s.gaps));
    }
  CHECK_THROWS(med_lift(GapSet{1, 2, 4}, 4));
}
