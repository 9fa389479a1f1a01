#include <doctest.h>

#include <map>

#include "kunzlab/engine.hpp"
#include "kunzlab/refdata.hpp"
#include "kunzlab/stats.hpp"
#include "oracles.hpp"

using namespace kunzlab;

namespace {

const Table1& table1() {
  static const Table1 t = load_table1(resolve_ref_dir(std::nullopt));
  return t;
}

}  // namespace

TEST_CASE("distribution moments") {
  Distribution d;
  d.add(1, 1);
  d.add(3, 3);
  d.add(5, 0);
  CHECK(d.total == 4);
  CHECK(d.counts.size() == 2);
  CHECK(d.mean() == Rational(5, 2));
  CHECK(d.probability(3) == Rational(3, 4));
  CHECK(d.probability(7) == 0);
  CHECK(d.central_moment(2) == Rational(3, 4));
  CHECK_THROWS(Distribution{}.mean());
}

TEST_CASE("finite-f distributions against the gap-set oracle") {
  for (int f = 1; f <= 15; ++f) {
    std::map<int, long> mult, genus;
    long total = 0;
    for (const auto& s : oracle::semigroups_with_frobenius(f)) {
      ++mult[f - 2 * s.multiplicity];
      ++genus[s.genus()];
      ++total;
    }
    const Distribution dm = mult_distribution(f);
    CHECK(dm.total == total);
    for (const auto& [k, n] : mult) CHECK(dm.counts.at(k) == n);
    CHECK(dm.counts.size() == mult.size());
    const GenusStats gs = genus_stats(f);
    CHECK(gs.distribution.total == total);
    for (const auto& [k, n] : genus) CHECK(gs.distribution.counts.at(k) == n);
    CHECK(gs.mean_deviation == gs.mean - Rational(3 * f, 4));
  }
}

TEST_CASE("Backelin brackets") {
  const ExactBracket c0 = backelin_bracket(Parity::even, 56, table1());
  CHECK(to_decimal(c0.lower, 4, Rounding::down) == "1.2606");
  CHECK(to_decimal(c0.upper, 4, Rounding::up) == "1.3919");
  const ExactBracket c1 = backelin_bracket(Parity::odd, 56, table1());
  CHECK(to_decimal(c1.lower, 4, Rounding::down) == "1.2755");
  CHECK(to_decimal(c1.upper, 4, Rounding::up) == "1.4068");
  // raising the cut never loosens the bracket
  const ExactBracket coarse = backelin_bracket(Parity::even, 30, table1());
  CHECK(coarse.contains(c0));
  CHECK_THROWS(backelin_bracket(Parity::even, 57, table1()));
}

TEST_CASE("limiting multiplicity masses sum to one") {
  const ExactBracket c0 = backelin_bracket(Parity::even, 56, table1());
  const ExactBracket at_lower = ExactBracket::point(c0.lower);
  Rational total = 0;
  for (int k = -60; k <= 28; ++k) {
    const ExactBracket m = limit_mult_mass(k, Parity::even, at_lower, table1());
    CHECK(m.lower == m.upper);
    total += m.lower;
  }
  // the negative side stops at 2^-61
  CHECK(total == 1 - Rational(1, pow2(61)) / c0.lower);
  CHECK(limit_mult_mass(0, Parity::even, c0, table1()).upper == 0);
  CHECK(limit_mult_mass(-1, Parity::odd, c0, table1()).lower > 0);
}

TEST_CASE("mu and gamma intervals") {
  const ExactBracket c0 = backelin_bracket(Parity::even, 56, table1());
  const ExactBracket c1 = backelin_bracket(Parity::odd, 56, table1());
  const ExactBracket mu0 = mu_gamma_partial(SeriesKind::mu0, 8, c0, table1());
  const ExactBracket mu1 = mu_gamma_partial(SeriesKind::mu1, 8, c1, table1());
  CHECK(mu0.lower < mu0.upper);
  CHECK(mu0.upper < 0);
  CHECK(mu1.upper < 0);
  const ExactBracket g0 = mu_gamma_partial(SeriesKind::gamma0, 8, c0, table1());
  const ExactBracket g1 = mu_gamma_partial(SeriesKind::gamma1, 10, c1, table1());
  CHECK(g0.lower < g0.upper);
  CHECK(g1.lower < g1.upper);
  CHECK_THROWS(mu_gamma_partial(SeriesKind::gamma0, 21, c0, table1()));
}

TEST_CASE("deep semigroups") {
  for (int f = 1; f <= 14; ++f) {
    long deep = 0, total = 0;
    for (const auto& s : oracle::semigroups_with_frobenius(f)) {
      deep += s.depth >= 4;
      ++total;
    }
    const auto [d, t] = deep_semigroup_share(f);
    CHECK(d == deep);
    CHECK(t == total);
  }
}

TEST_CASE("mu and gamma intervals nest as the cut grows") {
  const ExactBracket c0 = backelin_bracket(Parity::even, 56, table1());
  for (auto kind : {SeriesKind::mu0, SeriesKind::gamma0}) {
    ExactBracket prev = mu_gamma_partial(kind, 1, c0, table1());
    for (int cut = 2; cut <= 16; ++cut) {
      const ExactBracket next = mu_gamma_partial(kind, cut, c0, table1());
      CHECK(prev.contains(next));
      prev = next;
    }
  }
}
