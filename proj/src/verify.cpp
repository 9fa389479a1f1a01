#include "kunzlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kunzlab/bounds.hpp"
#include "kunzlab/cli.hpp"
#include "kunzlab/count_query.hpp"
#include "kunzlab/engine.hpp"
#include "kunzlab/families.hpp"
#include "kunzlab/graph.hpp"
#include "kunzlab/kunz_word.hpp"
#include "kunzlab/stats.hpp"

namespace kunzlab::verify {
namespace {

using Clock = std::chrono::steady_clock;

// Budget and tolerance constants for the acceptance criteria.
constexpr double kTable1Seconds = 60.0;
constexpr double kTable2Seconds = 300.0;
constexpr int kTable1ComputedMax = 24;
constexpr int kRandomGraphs = 500;
constexpr double kRootTolerance = 0.15;
constexpr double kDeepShareMax = 0.15;
constexpr double kMuSlack = 0.05;
constexpr double kGammaSlack = 0.2;

struct Outcome {
  bool ok = true;
  std::string detail;
  int failures = 0;
  // keeps the first few messages
  void fail(const std::string& why) {
    if (failures < 3) detail += (failures ? "; " : "") + why;
    else if (failures == 3) detail += "; ...";
    ++failures;
    ok = false;
  }
};

CheckResult timed(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  CheckResult r;
  r.name = name;
  try {
    Outcome o = body();
    r.passed = o.ok;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

double elapsed_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

CountQuery fq(int f) {
  CountQuery q;
  q.frobenius = f;
  return q;
}

// 1
Outcome golden_table1(const Context& ctx) {
  Outcome o;
  const auto start = Clock::now();
  for (int len = 1; len <= kTable1ComputedMax; ++len) {
    auto it = ctx.table1.find(len);
    if (it == ctx.table1.end()) {
      o.fail("reference row missing for ell=" + std::to_string(len));
      return o;
    }
    const BigInt got = count_stressed3(len);
    if (got != it->second) o.fail("ell=" + std::to_string(len) + ": computed " + got.str() + ", table " + it->second.str());
  }
  const double secs = elapsed_since(start);
  if (ctx.table1.size() != 56) o.fail("table1 has " + std::to_string(ctx.table1.size()) + " rows, expected 56");
  if (secs >= kTable1Seconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) {
    std::ostringstream os;
    os << "ell<=" << kTable1ComputedMax << " exact, " << std::fixed;
    os.precision(2);
    os << secs << " s";
    o.detail = os.str();
  }
  return o;
}

// 2
Outcome golden_table2(const Context& ctx) {
  Outcome o;
  const auto start = Clock::now();
  int matched = 0;
  for (const auto& [key, expected] : ctx.table2) {
    CountQuery q;
    q.frobenius = key.first;
    q.length = key.second - 1;
    BigInt got = count(q, {ctx.threads, true});
    // The table leaves out the ordinary semigroup {0, m, m+1, ...} (f = m-1).
    if (key.first == key.second - 1) got -= 1;
    if (got != expected)
      o.fail("f=" + std::to_string(key.first) + " m=" + std::to_string(key.second) + ": computed " + got.str() +
             ", table " + expected.str());
    else
      ++matched;
  }
  const double secs = elapsed_since(start);
  if (ctx.table2.size() != 240) o.fail("table2 has " + std::to_string(ctx.table2.size()) + " rows, expected 240");
  if (secs >= kTable2Seconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) {
    std::ostringstream os;
    os << matched << "/240 exact, " << std::fixed;
    os.precision(2);
    os << secs << " s";
    o.detail = os.str();
  }
  return o;
}

// 3
Outcome backelin_digits(const Context& ctx) {
  Outcome o;
  struct Want {
    Parity parity;
    const char* name;
    const char* lo;
    const char* hi;
  };
  const Want wants[] = {{Parity::even, "C0", "1.2606", "1.3919"}, {Parity::odd, "C1/sqrt2", "1.2755", "1.4068"}};
  std::string detail;
  for (const auto& w : wants) {
    const ExactBracket b = backelin_bracket(w.parity, 56, ctx.table1);
    const std::string lo = to_decimal(b.lower, 4, Rounding::down);
    const std::string hi = to_decimal(b.upper, 4, Rounding::up);
    if (lo != w.lo || hi != w.hi) o.fail(std::string(w.name) + " bracket rounds to (" + lo + ", " + hi + ")");
    // strictly inside the open interval
    const Rational open_lo(std::string(w.lo) == "1.2606" ? Rational(12606, 10000) : Rational(12755, 10000));
    const Rational open_hi(std::string(w.hi) == "1.3919" ? Rational(13919, 10000) : Rational(14068, 10000));
    if (!(b.lower > open_lo && b.upper < open_hi)) o.fail(std::string(w.name) + " bracket not inside the open interval");
    detail += std::string(detail.empty() ? "" : ", ") + w.name + " in [" + lo + ", " + hi + "]";
  }
  if (o.ok) o.detail = detail;
  return o;
}

// 4
Outcome closed_forms(const Context& ctx) {
  Outcome o;
  int checked = 0;
  for (int f = 1; f <= 30; ++f) {
    for (int len = 1; len <= f; ++len) {
      for (int depth : {2, 3}) {
        CountQuery q;
        q.frobenius = f;
        q.length = len;
        q.depth_exact = depth;
        const BigInt brute = count(q, {ctx.threads, false});
        const BigInt closed = depth == 2 ? closed_k2(f, len) : closed_k3(f, len);
        ++checked;
        if (brute != closed)
          o.fail("depth " + std::to_string(depth) + " f=" + std::to_string(f) + " len=" + std::to_string(len) +
                 ": closed " + closed.str() + ", enumerated " + brute.str());
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " (f, len, depth) cells";
  return o;
}

// 5
Outcome med_identities(const Context&) {
  Outcome o;
  for (int f = 1; f <= 25; ++f) {
    BigInt direct_total = 0;
    for (int q = 1; q <= f + 1; ++q) {
      const BigInt d = med_count(f, q, MedRoute::direct);
      const BigInt s = med_count(f, q, MedRoute::via_contains);
      direct_total += d;
      if (d != s)
        o.fail("f=" + std::to_string(f) + " q=" + std::to_string(q) + ": direct " + d.str() + ", via contains " + s.str());
    }
    if (direct_total != med_count(f)) o.fail("depth partition fails at f=" + std::to_string(f));
    if (f >= 3 && med_count(f, 2) != med2_partial_frobenius_sum(f))
      o.fail("depth-2 sum identity fails at f=" + std::to_string(f));
  }
  for (int n = 1; n <= 12; ++n)
    if (med_count(2 * n - 1, 2) != med_count(2 * n, 2)) o.fail("MED_2 pairing fails at n=" + std::to_string(n));
  if (o.ok) o.detail = "f<=25 both routes and depth-2 sum; n<=12 pairing";
  return o;
}

LabeledGraph random_graph(std::mt19937_64& rng, int n, int d) {
  LabeledGraph g(n);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.2, 0.9)(rng));
  for (auto [u, v] : pairs)
    if (g.degree(u) < d && g.degree(v) < d && keep(rng)) g.add_edge(u, v);
  return g;
}

// 6
Outcome graph_suite(const Context&) {
  Outcome o;
  for (int d = 1; d <= 3; ++d)
    for (int q = 1; q <= 5; ++q)
      if (hom_kdd(d, q) != hom_count(complete_bipartite(d, d), threshold_graph(q)))
        o.fail("hom_kdd mismatch at d=" + std::to_string(d) + " q=" + std::to_string(q));
  for (int d = 1; d <= 8; ++d)
    for (int q = 1; q <= 10; ++q)
      if (hom_kdd(d, q) > kdd_hom_bound(d, q))
        o.fail("K_dd bound fails at d=" + std::to_string(d) + " q=" + std::to_string(q));

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick_n(1, 8), pick_d(1, 4);
  int direct = 0;
  for (int trial = 0; trial < kRandomGraphs; ++trial) {
    const int n = pick_n(rng), d = pick_d(rng);
    const LabeledGraph g = random_graph(rng, n, d);
    const LabeledGraph r = regularize(g, d);
    const std::string where = "graph #" + std::to_string(trial) + " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
    for (int v = 0; v < r.vertex_count(); ++v)
      if (r.degree(v) != d) o.fail(where + ": output not regular");
    if (r.has_loops()) o.fail(where + ": output has loops");
    if (Rational(r.vertex_count()) > regularize_vertex_bound(g, d)) o.fail(where + ": vertex bound exceeded");
    for (int q = 2; q <= 4; ++q) {
      const LabeledGraph h = threshold_graph(q);
      const BigInt before = hom_count(g, h);
      const BigInt admissible = admissible_hom_count(r, h, q - 1);
      if (before > admissible) o.fail(where + ": admissible homomorphisms decreased at q=" + std::to_string(q));
      if (r.vertex_count() <= kHomGuard) {
        ++direct;
        if (hom_count(r, h) < admissible) o.fail(where + ": admissible count exceeds hom count");
      }
    }
  }

  int zhao = 0;
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 8; ++n)
      for (const auto& g : regular_graphs(n, d))
        for (int q = 1; q <= 5; ++q) {
          ++zhao;
          const BigInt lhs = pow_int(hom_count(g, threshold_graph(q)), static_cast<unsigned>(2 * d));
          const BigInt rhs = pow_int(hom_kdd(d, q), static_cast<unsigned>(n));
          if (lhs > rhs) o.fail("Zhao inequality fails: n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
  if (o.ok)
    o.detail = std::to_string(kRandomGraphs) + " random graphs (" + std::to_string(direct) +
               " direct hom checks), " + std::to_string(zhao) + " Zhao instances";
  return o;
}

// 7
Outcome bound_dominance(const Context& ctx) {
  Outcome o;
  int checked = 0;
  for (int len = 1; len <= 10; ++len)
    for (int q = 1; q <= 4; ++q) {
      CountQuery cq;
      cq.length = len;
      cq.depth_max = q;
      ++checked;
      if (count(cq, {ctx.threads, false}) > depth_capped_bound(len, q))
        o.fail("trivial bound fails at len=" + std::to_string(len) + " q=" + std::to_string(q));
    }
  for (int f = 1; f <= 25; ++f)
    for (int q = 2; q <= f + 1; ++q) {
      CountQuery cq = fq(f);
      cq.depth_exact = q;
      const BigInt n = count(cq, {ctx.threads, true});
      if (n == 0) continue;
      ++checked;
      if (compare(PowerProduct(n), frobenius_depth_bound(f, q)) > 0)
        o.fail("f q^(f/(q-1)) bound fails at f=" + std::to_string(f) + " q=" + std::to_string(q));
    }
  for (const auto& [len, ref] : ctx.table1) {
    const Stressed3Bounds b = stressed3_upper_bounds(len);
    ++checked;
    if (ref > b.naive) o.fail("naive stressed bound fails at ell=" + std::to_string(len));
    if (Rational(ref) > b.backelin) o.fail("Backelin bound fails at ell=" + std::to_string(len));
    if (len <= kTable1ComputedMax) {
      const BigInt got = count_stressed3(len);
      if (Rational(got) > b.backelin || b.backelin > Rational(b.naive))
        o.fail("ordering count <= Backelin <= naive fails at ell=" + std::to_string(len));
    }
  }
  for (int q = 2; q <= 5; ++q)
    for (int j = 1; j <= (q <= 3 ? 14 : 9); ++j) {
      CountQuery cq;
      cq.length = j;
      cq.depth_exact = q;
      cq.stressed = true;
      const BigInt n = count(cq, {ctx.threads, false});
      ++checked;
      if (n * n > stressed_naive_bound_squared(q, j))
        o.fail("depth-" + std::to_string(q) + " naive bound fails at j=" + std::to_string(j));
    }
  for (int len = 1; len <= 14; ++len)
    for (int t = 1; t <= len; ++t)
      for (int q = 2; q <= 4; ++q) {
        const BigInt n = tail_heavy_count(TailHeavySpec::make(len, t, q));
        ++checked;
        if (n != 0 && compare(PowerProduct(n), tail_heavy_bound(len, t, q)) > 0)
          o.fail("tail-heavy bound fails at len=" + std::to_string(len) + " t=" + std::to_string(t) +
                 " q=" + std::to_string(q));
      }
  if (o.ok) o.detail = std::to_string(checked) + " exact comparisons";
  return o;
}

// 8
Outcome lower_bound_suite(const Context&) {
  Outcome o;
  long words = 0;
  for (int q = 3; q <= 6; ++q)
    for (int len = 1; len <= 12; ++len)
      for (int j = 1; j <= len; ++j) {
        const LowerBoundFamily fam = lower_bound_family(q, len, j);
        const int want_f = (len + 1) * (q - 1) + j;
        long streamed = 0;
        bool bad = false;
        fam.for_each([&](std::span<const int> w) {
          ++streamed;
          if (bad) return;
          if (!is_kunz(w)) {
            bad = true;
            return;
          }
          int top = 0, last = 0;
          for (int i = 0; i < len; ++i)
            if (w[i] >= top) {
              top = w[i];
              last = i + 1;
            }
          if (top != q || (len + 1) * (q - 1) + last != want_f) bad = true;
        });
        words += streamed;
        const std::string where = "q=" + std::to_string(q) + " len=" + std::to_string(len) + " j=" + std::to_string(j);
        if (bad) o.fail(where + ": generated word is not q-Kunz with the predicted Frobenius number");
        if (BigInt(streamed) != fam.formula_count() || fam.product_count() != fam.formula_count())
          o.fail(where + ": stream length differs from the product formula");
      }
  if (o.ok) o.detail = std::to_string(words) + " words checked";
  return o;
}

// 9
Outcome asymptotic_trends(const Context& ctx) {
  Outcome o;
  std::vector<std::string> parts;
  auto part = [&](const char* tag, const std::vector<std::string>& problems, const std::string& summary) {
    std::string line = std::string(tag) + (problems.empty() ? " ok " : " FAIL ") + summary;
    for (std::size_t i = 0; i < problems.size() && i < 4; ++i) line += (i ? ", " : ": ") + problems[i];
    if (problems.size() > 4) line += ", ...";
    parts.push_back(line);
    if (!problems.empty()) o.ok = false;
  };
  auto num = [](double v) {
    std::ostringstream os;
    os << std::fixed;
    os.precision(4);
    os << v;
    return os.str();
  };

  // (a) K(l)^(1/l) near sqrt 6 and nondecreasing along each parity
  {
    std::vector<std::string> bad;
    const double root6 = std::sqrt(6.0);
    double prev[2] = {0, 0};
    double lo = 1e9, hi = 0;
    for (int len = 20; len <= 28; ++len) {
      const BigInt k = count_stressed3(len);
      if (auto it = ctx.table1.find(len); it != ctx.table1.end() && it->second != k)
        bad.push_back("count differs from table at ell=" + std::to_string(len));
      const double root = std::exp(PowerProduct(k).log() / len);
      lo = std::min(lo, root);
      hi = std::max(hi, root);
      if (std::abs(root - root6) > kRootTolerance) bad.push_back("off sqrt 6 at ell=" + std::to_string(len));
      if (root < prev[len % 2]) bad.push_back("decreases at ell=" + std::to_string(len));
      prev[len % 2] = root;
    }
    part("(a)", bad, "roots in [" + num(lo) + ", " + num(hi) + "]");
  }

  // (b) depth >= 4 share small and shrinking along each parity
  {
    std::vector<std::string> bad;
    double last_share[2] = {1, 1};
    double worst = 0;
    for (int f = 20; f <= 40; ++f) {
      const auto [deep, total] = deep_semigroup_share(f);
      const double share = to_double(Rational(deep, total));
      worst = std::max(worst, share);
      if (share >= kDeepShareMax) bad.push_back("share >= 0.15 at f=" + std::to_string(f));
      if (share >= last_share[f % 2]) bad.push_back("share rises at f=" + std::to_string(f));
      last_share[f % 2] = share;
    }
    part("(b)", bad, "max share " + num(worst));
  }

  // (c) genus skewness magnitude decreasing
  GenusStats at40;
  {
    std::vector<std::string> bad;
    Rational prev_skew2 = -1;
    std::string values;
    for (int f : {20, 30, 40}) {
      GenusStats s = genus_stats(f);
      values += (values.empty() ? "" : " ") + num(s.skewness());
      if (prev_skew2 >= 0 && s.skewness_squared >= prev_skew2) bad.push_back("|skew| grows at f=" + std::to_string(f));
      prev_skew2 = s.skewness_squared;
      if (f == 40) at40 = std::move(s);
    }
    part("(c)", bad, "skew " + values);
  }

  // (d) empirical means at f = 40 inside the limiting intervals
  {
    std::vector<std::string> bad;
    const ExactBracket c0 = backelin_bracket(Parity::even, 56, ctx.table1);
    const ExactBracket mu = mu_gamma_partial(SeriesKind::mu0, 8, c0, ctx.table1);
    const ExactBracket gamma = mu_gamma_partial(SeriesKind::gamma0, 8, c0, ctx.table1);
    const Rational mean_m = -mult_distribution(40).mean() / 2;  // key is f - 2m
    if (!mu.widened(Rational(kMuSlack)).contains(mean_m)) bad.push_back("m - f/2 outside mu0 interval");
    if (!gamma.widened(Rational(kGammaSlack)).contains(at40.mean_deviation))
      bad.push_back("g - 3f/4 outside gamma0 interval");
    part("(d)", bad,
         "m-f/2=" + to_decimal(mean_m, 3, Rounding::down) + " in [" + to_decimal(mu.lower, 3, Rounding::down) + ", " +
             to_decimal(mu.upper, 3, Rounding::up) + "], g-3f/4=" + to_decimal(at40.mean_deviation, 3, Rounding::down) +
             " in [" + to_decimal(gamma.lower, 3, Rounding::down) + ", " + to_decimal(gamma.upper, 3, Rounding::up) + "]");
  }

  for (const auto& p : parts) o.detail += (o.detail.empty() ? "" : "; ") + p;
  return o;
}

// 10
Outcome determinism(const Context&) {
  Outcome o;
  const std::vector<std::vector<std::string>> queries = {
      {"count", "--f", "29", "--m", "10"},
      {"count", "--f", "38"},
      {"count", "--ell", "16", "--depth-max", "3"},
      {"count", "--f", "30", "--med"},
      {"count", "--ell", "9", "--depth", "4", "--stressed"},
      {"count", "--f", "35", "--m", "12", "--format", "csv"},
  };
  for (const auto& q : queries) {
    std::string reference;
    for (const char* threads : {"1", "4", "16"}) {
      std::vector<std::string> args = {"kunzlab"};
      args.insert(args.end(), q.begin(), q.end());
      args.push_back("--threads");
      args.push_back(threads);
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
      std::string joined;
      for (const auto& a : q) joined += a + ' ';
      if (code != 0) o.fail("'" + joined + "' exited with " + std::to_string(code) + ": " + err.str());
      if (std::string(threads) == "1") reference = out.str();
      else if (out.str() != reference) o.fail("'" + joined + "' output differs at --threads " + threads);
    }
  }
  if (o.ok) o.detail = std::to_string(queries.size()) + " queries byte-identical across --threads 1/4/16";
  return o;
}

const char* criterion_name(int c) {
  switch (c) {
    case 1: return "golden-table1";
    case 2: return "golden-table2";
    case 3: return "backelin-brackets";
    case 4: return "closed-forms";
    case 5: return "med-identities";
    case 6: return "graph-suite";
    case 7: return "bound-dominance";
    case 8: return "lower-bound-family";
    case 9: return "asymptotic-trends";
    case 10: return "determinism";
  }
  return "unknown";
}

Outcome c_monotone() {
  Outcome o;
  const std::vector<Rational> r_grid = {0, Rational(1, 2), 1};
  const std::vector<Rational> t_grid = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
  MonotoneReport ratio = check_c_monotone(10000, r_grid, {});
  if (!ratio.ok) o.fail(ratio.first_violation);
  MonotoneReport blend = check_c_monotone(200, r_grid, t_grid);
  if (!blend.ok) o.fail(blend.first_violation);
  // c_3^(1/4) < 2^(1/3): 6^3 < 2^8
  const PowerProduct lhs = cq_power(3, Rational(1, 4));
  PowerProduct rhs;
  rhs.times(2, Rational(1, 3));
  if (compare(lhs, rhs) >= 0) o.fail("c_3^(1/4) < 2^(1/3) fails");
  if (o.ok) o.detail = std::to_string(ratio.comparisons + blend.comparisons) + " exact comparisons";
  return o;
}

Outcome schur_equivalence(const Context& ctx) {
  Outcome o;
  for (int n = 1; n <= 18; ++n) {
    CountQuery q;
    q.length = n;
    q.depth_max = 3;
    if (schur_colorings(n) != count(q, {ctx.threads, false})) o.fail("Schur colourings differ at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "n<=18";
  return o;
}

Outcome partition_identities(const Context& ctx) {
  Outcome o;
  for (int f = 1; f <= 25; ++f) {
    const BigInt total = count(fq(f), {ctx.threads, true});
    BigInt by_len = 0, by_depth = 0;
    for (int len = 1; len <= f; ++len) {
      CountQuery q = fq(f);
      q.length = len;
      by_len += count(q, {ctx.threads, true});
    }
    for (int depth = 1; depth <= f + 1; ++depth) {
      CountQuery q = fq(f);
      q.depth_exact = depth;
      by_depth += count(q, {ctx.threads, true});
    }
    if (by_len != total || by_depth != total) o.fail("partition identity fails at f=" + std::to_string(f));
    if (BigInt(enumerate(fq(f)).size()) != total) o.fail("enumerate/count mismatch at f=" + std::to_string(f));
  }
  if (o.ok) o.detail = "f<=25 by length and by depth";
  return o;
}

Outcome core_round_trip(const Context&) {
  Outcome o;
  long words = 0;
  for (int len = 1; len <= 6; ++len) {
    CountQuery q;
    q.length = len;
    q.depth_max = 4;
    for_each_word(q, [&](std::span<const int> w) {
      ++words;
      const KunzWord word(std::vector<int>(w.begin(), w.end()));
      const GapSet gaps = gaps_from_word(word);
      if (word_from_gaps(gaps) != word) o.fail("round trip fails for " + word.str());
      const auto inv = invariants(word);
      if (inv.frobenius != gaps.frobenius() || inv.genus != static_cast<int>(gaps.size()) ||
          inv.multiplicity != gaps.multiplicity())
        o.fail("invariants disagree with gaps for " + word.str());
    });
  }
  if (o.ok) o.detail = std::to_string(words) + " words";
  return o;
}

Outcome depth2_mult_identity() {
  Outcome o;
  for (int f = 4; f <= 40; f += 2) {
    const Distribution d = mult_distribution(f);
    for (int m = f / 2 + 1; m <= f + 1; ++m) {
      auto it = d.counts.find(f - 2 * m);
      const BigInt got = it == d.counts.end() ? BigInt(0) : it->second;
      // 2^(f/2+k-1) with 2k = f - 2m; m = f is impossible, m = f + 1 is {0, m, m+1, ...}
      const BigInt want = m < f ? pow2(static_cast<unsigned>(f - m - 1)) : BigInt(m == f ? 0 : 1);
      if (got != want) o.fail("f=" + std::to_string(f) + " m=" + std::to_string(m));
    }
  }
  if (o.ok) o.detail = "even f<=40";
  return o;
}

Outcome finite_mass_near_limit(const Context& ctx) {
  Outcome o;
  const ExactBracket c0 = backelin_bracket(Parity::even, 56, ctx.table1);
  const Rational p = mult_distribution(40).probability(-2);
  const ExactBracket lim = limit_mult_mass(-1, Parity::even, c0, ctx.table1);
  o.detail = "P(f-2m=-2) at f=40 is " + to_decimal(p, 4, Rounding::down) + ", limit in [" +
             to_decimal(lim.lower, 4, Rounding::down) + ", " + to_decimal(lim.upper, 4, Rounding::up) + "] +- 0.02";
  if (!lim.widened(Rational(1, 50)).contains(p)) o.ok = false;
  return o;
}

Outcome genus_mean_window() {
  Outcome o;
  Rational lo = 100, hi = -100;
  for (int f = 20; f <= 40; ++f) {
    const Rational dev = genus_stats(f).mean_deviation;
    lo = std::min(lo, dev);
    hi = std::max(hi, dev);
    if (dev < -2 || dev > 2) o.fail("f=" + std::to_string(f));
  }
  if (o.ok)
    o.detail = "g-3f/4 in [" + to_decimal(lo, 3, Rounding::down) + ", " + to_decimal(hi, 3, Rounding::up) + "] for 20<=f<=40";
  return o;
}

Outcome depth4_concentration(const Context& ctx) {
  Outcome o;
  std::string values;
  Rational prev = -1;
  for (int f : {30, 36, 42}) {
    BigInt near = 0, total = 0;
    for (int len = 1; len <= f; ++len) {
      CountQuery q = fq(f);
      q.length = len;
      q.depth_exact = 4;
      const BigInt n = count(q, {ctx.threads, true});
      total += n;
      // |f - 3m| < 0.2 f
      if (5 * std::abs(f - 3 * (len + 1)) < f) near += n;
    }
    const Rational share(near, total);
    values += (values.empty() ? "" : " ") + to_decimal(share, 3, Rounding::down);
    if (share <= prev) o.ok = false;
    prev = share;
  }
  o.detail = "depth-4 mass with |f-3m|<0.2f at f=30,36,42: " + values;
  return o;
}

Outcome average_genus_checks() {
  Outcome o;
  if (stressed3_avg_genus(1) != 3 || stressed3_avg_genus(2) != Rational(11, 2)) o.fail("G_1 or G_2 wrong");
  for (int j = 1; j <= 18; ++j)
    if (stressed3_avg_genus(j) > 3 * j || stressed3_avg_genus(j) < j + 2) o.fail("j+2 <= G_j <= 3j fails at j=" + std::to_string(j));
  if (o.ok) o.detail = "j<=18";
  return o;
}

std::vector<CheckResult> run_named(const std::vector<std::pair<std::string, std::function<Outcome()>>>& checks,
                                   const std::function<void(const CheckResult&)>& report) {
  std::vector<CheckResult> out;
  for (const auto& [name, body] : checks) {
    out.push_back(timed(name, body));
    if (report) report(out.back());
  }
  return out;
}

}  // namespace

Context load_context(const std::string& ref_dir, unsigned threads) {
  return {load_table1(ref_dir), load_table2(ref_dir), threads};
}

CheckResult acceptance(int criterion, const Context& ctx) {
  const std::string name = "criterion " + std::to_string(criterion) + " " + criterion_name(criterion);
  return timed(name, [&]() -> Outcome {
    switch (criterion) {
      case 1: return golden_table1(ctx);
      case 2: return golden_table2(ctx);
      case 3: return backelin_digits(ctx);
      case 4: return closed_forms(ctx);
      case 5: return med_identities(ctx);
      case 6: return graph_suite(ctx);
      case 7: return bound_dominance(ctx);
      case 8: return lower_bound_suite(ctx);
      case 9: return asymptotic_trends(ctx);
      case 10: return determinism(ctx);
    }
    throw std::invalid_argument("no acceptance criterion " + std::to_string(criterion));
  });
}

std::vector<std::string> suite_names() {
  return {"tables", "closed-forms", "med", "graphs", "bounds", "lower-bound", "trends", "determinism", "acceptance", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const Context& ctx,
                                   const std::function<void(const CheckResult&)>& report) {
  auto criteria = [&](std::vector<int> ids) {
    std::vector<CheckResult> out;
    for (int id : ids) {
      out.push_back(acceptance(id, ctx));
      if (report) report(out.back());
    }
    return out;
  };
  if (suite == "tables") return criteria({1, 2});
  if (suite == "closed-forms") return criteria({4});
  if (suite == "med") return criteria({5});
  if (suite == "graphs") return criteria({6});
  if (suite == "lower-bound") return criteria({8});
  if (suite == "trends") return criteria({9});
  if (suite == "determinism") return criteria({10});
  if (suite == "bounds") {
    auto out = criteria({3, 7});
    auto extra = run_named({{"c_q monotonicity", c_monotone}}, report);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  }
  if (suite == "acceptance") return criteria({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  if (suite == "all") {
    auto out = criteria({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    auto extra = run_named({{"c_q monotonicity", c_monotone},
                            {"schur equivalence", [&] { return schur_equivalence(ctx); }},
                            {"partition identities", [&] { return partition_identities(ctx); }},
                            {"word/gap round trip", [&] { return core_round_trip(ctx); }},
                            {"depth-2 multiplicity counts", depth2_mult_identity},
                            {"average genus range", average_genus_checks},
                            {"genus mean window", genus_mean_window},
                            {"finite-f mass near limit", [&] { return finite_mass_near_limit(ctx); }},
                            {"depth-4 concentration trend", [&] { return depth4_concentration(ctx); }}},
                           report);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string format_line(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name;
  if (!r.detail.empty()) os << " (" << r.detail << ")";
  return os.str();
}

}  // namespace kunzlab::verify
