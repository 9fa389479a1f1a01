#include "kunzlab/families.hpp"

#include <bit>
#include <stdexcept>
#include <tuple>

#include "kunzlab/count_query.hpp"
#include "kunzlab/engine.hpp"

namespace kunzlab {
namespace {

// Stressed depth-3 words of length len are fixed by the set S of positions
// holding 1. Positions in (S + S) \ S are forced to 2, len itself must avoid
// S + S, and every other position below len is free in {2, 3}.
// tally[c][s] counts sets S with |S| = s and |S u (S+S)| restricted to
// [len-1] equal to c.
class Stressed3Tally {
 public:
  explicit Stressed3Tally(int len) : len_(len), tally_(len, std::vector<std::uint64_t>(len, 0)) {
    if (len < 1 || len > 62) throw std::invalid_argument("stressed depth-3 search supports lengths 1..62");
    below_ = (std::uint64_t{1} << len) - 2;  // bits 1..len-1
    keep_ = below_ | (std::uint64_t{1} << len);
    visit(1, 0, 0, 0);
  }

  BigInt count() const {
    BigInt total = 0;
    for (int c = 0; c < len_; ++c)
      for (int s = 0; s < len_; ++s)
        if (tally_[c][s]) total += BigInt(tally_[c][s]) * pow2(static_cast<unsigned>(free(c)));
    return total;
  }

  BigInt genus_sum() const {
    BigInt total = 0;
    for (int c = 0; c < len_; ++c) {
      const int fr = free(c);
      for (int s = 0; s < len_; ++s) {
        if (!tally_[c][s]) continue;
        // ones, forced twos, the final 3, then each free entry averages 5/2
        BigInt per = pow2(static_cast<unsigned>(fr)) * (s + 2 * (c - s) + 3 + 2 * fr);
        if (fr > 0) per += BigInt(fr) * pow2(static_cast<unsigned>(fr - 1));
        total += per * tally_[c][s];
      }
    }
    return total;
  }

 private:
  int free(int c) const { return len_ - 1 - c; }

  void visit(int start, std::uint64_t ones, std::uint64_t covered, int size) {
    ++tally_[std::popcount(covered & below_)][size];
    for (int s = start; s < len_; ++s) {
      const std::uint64_t next_ones = ones | (std::uint64_t{1} << s);
      const std::uint64_t next_cov = (covered | next_ones | (next_ones << s)) & keep_;
      if (next_cov >> len_ & 1) continue;
      visit(s + 1, next_ones, next_cov, size + 1);
    }
  }

  int len_;
  std::uint64_t below_ = 0, keep_ = 0;
  std::vector<std::vector<std::uint64_t>> tally_;
};

}  // namespace

BigInt count_stressed3(int length) { return Stressed3Tally(length).count(); }

BigInt stressed3_genus_sum(int length) { return Stressed3Tally(length).genus_sum(); }

Rational stressed3_avg_genus(int length) {
  if (length < 1 || length > 40) throw std::invalid_argument("average genus supports lengths 1..40");
  Stressed3Tally t(length);
  return Rational(t.genus_sum()) / Rational(t.count());
}

BigInt closed_k2(int f, int length) {
  if (f < 3 || length < 1) return 0;
  if (2 * length < f - 1 || length > f - 2) return 0;
  return pow2(static_cast<unsigned>(f - 2 - length));
}

BigInt closed_k3(int f, int length) {
  if (f < 5 || length < 1) return 0;
  if (3 * length < f - 2 || 2 * length > f - 3) return 0;
  const int j = f - 2 - 2 * length;
  return pow2(static_cast<unsigned>(length - j)) * count_stressed3(j);
}

namespace {

BigInt med_direct(int f, int depth) {
  CountQuery q;
  q.frobenius = f;
  q.med = true;
  q.depth_exact = depth;
  return count(q);
}

BigInt med_via_contains(int f, int depth) {
  // The trivial semigroup lifts to the all-ones word of length f.
  if (depth == 1) return 1;
  BigInt total = 0;
  const int lo = (f + 1 + depth - 1) / depth;  // ceil((f+1)/q)
  for (int m = lo; m * (depth - 1) < f + 1; ++m) {
    if (f - m < 1) continue;
    CountQuery q;
    q.frobenius = f - m;
    q.contains = m;
    total += count(q);
  }
  return total;
}

}  // namespace

BigInt med_count(int f, std::optional<int> depth, MedRoute route) {
  if (f < 1) return 0;
  auto one = [&](int q) { return route == MedRoute::direct ? med_direct(f, q) : med_via_contains(f, q); };
  if (depth) return *depth < 1 ? BigInt(0) : one(*depth);
  BigInt total = 0;
  for (int q = 1; q <= f + 1; ++q) total += one(q);
  return total;
}

BigInt med2_partial_frobenius_sum(int f) {
  BigInt total = 0;
  for (int k = 1; k <= (f - 1) / 2; ++k) {
    CountQuery q;
    q.frobenius = k;
    total += count(q);
  }
  return total;
}

LowerBoundFamily lower_bound_family(int depth, int length, int peak) {
  if (depth < 3) throw std::invalid_argument("lower-bound family needs depth >= 3");
  if (peak < 1 || peak > length) throw std::invalid_argument("lower-bound family needs 1 <= j <= length");
  return {depth, length, peak};
}

std::pair<int, int> LowerBoundFamily::interval(int i) const {
  const int q = depth, j = peak;
  if (i == j) return {q, q};
  if (2 * i <= j) return {(q + 1) / 2, q};
  if (i < j) return {q / 2, q};
  if (2 * i <= length + j + 1) return {q / 2, q - 1};
  return {(q - 1) / 2, q - 1};
}

BigInt LowerBoundFamily::product_count() const {
  BigInt total = 1;
  for (int i = 1; i <= length; ++i) {
    const auto [lo, hi] = interval(i);
    total *= hi - lo + 1;
  }
  return total;
}

BigInt LowerBoundFamily::formula_count() const {
  const int q = depth, j = peak, l = length;
  return pow_int((q + 2) / 2, j / 2) * pow_int((q + 3) / 2, (j - 1) / 2) *
         pow_int((q + 1) / 2, (l - j + 1) / 2) * pow_int((q + 2) / 2, (l - j) / 2);
}

void LowerBoundFamily::for_each(const std::function<void(std::span<const int>)>& visit) const {
  std::vector<int> w(length), lo(length), hi(length);
  for (int i = 0; i < length; ++i) std::tie(lo[i], hi[i]) = interval(i + 1);
  w = lo;
  while (true) {
    visit(w);
    int i = length - 1;
    while (i >= 0 && w[i] == hi[i]) {
      w[i] = lo[i];
      --i;
    }
    if (i < 0) return;
    ++w[i];
  }
}

namespace {

// colour 1 marks "red", colour 3 "blue"; z may be blue only if no red pair sums to z
std::uint64_t schur_from(int z, int n, std::uint64_t reds) {
  bool blue_ok = true;
  for (int x = 1; 2 * x <= z; ++x)
    if ((reds >> x & 1) && (reds >> (z - x) & 1)) {
      blue_ok = false;
      break;
    }
  if (z == n) return blue_ok ? 3 : 2;
  std::uint64_t total = schur_from(z + 1, n, reds | (std::uint64_t{1} << z));
  total += schur_from(z + 1, n, reds);
  if (blue_ok) total += schur_from(z + 1, n, reds);
  return total;
}

}  // namespace

BigInt schur_colorings(int n) {
  if (n < 0 || n > 40) throw std::invalid_argument("Schur colorings support 0 <= n <= 40");
  if (n == 0) return 1;
  return BigInt(schur_from(1, n, 0));
}

TailHeavySpec TailHeavySpec::make(int length, int tail, int depth) {
  TailHeavySpec s{length, tail, depth, 0};
  s.min_heavy = length >= 0 ? isqrt(BigInt(length)).convert_to<int>() + 1 : 0;
  s.validate();
  return s;
}

void TailHeavySpec::validate() const {
  if (tail < 1 || tail > length) throw std::invalid_argument("tail-heavy spec needs 1 <= t <= length");
  if (depth < 2) throw std::invalid_argument("tail-heavy spec needs depth >= 2");
  if (length > 62) throw std::invalid_argument("tail-heavy spec supports lengths up to 62");
}

namespace {

// Bit p set when some head pair x + y = p has w_x + w_y < q.
std::uint64_t violated_tail(std::span<const int> head, int q) {
  std::uint64_t bad = 0;
  const int h = static_cast<int>(head.size());
  for (int x = 1; x <= h; ++x)
    for (int y = x; y <= h; ++y)
      if (head[x - 1] + head[y - 1] < q && x + y < 64) bad |= std::uint64_t{1} << (x + y);
  return bad;
}

void tally_heads(int x, int h, int q, std::vector<int>& w, std::uint64_t bad, std::uint64_t tail_mask,
                 std::vector<std::uint64_t>& by_free) {
  if (x > h) {
    ++by_free[std::popcount(tail_mask & ~bad)];
    return;
  }
  for (int v = 1; v <= q; ++v) {
    w[x] = v;
    std::uint64_t next = bad;
    for (int y = 1; y <= x; ++y)
      if (w[y] + v < q && x + y < 64) next |= std::uint64_t{1} << (x + y);
    tally_heads(x + 1, h, q, w, next, tail_mask, by_free);
  }
}

}  // namespace

bool is_tail_heavy(std::span<const int> word, const TailHeavySpec& spec) {
  spec.validate();
  if (static_cast<int>(word.size()) != spec.length) return false;
  for (int e : word)
    if (e < 1 || e > spec.depth) return false;
  const int h = spec.length - spec.tail;
  const std::uint64_t bad = violated_tail(word.subspan(0, h), spec.depth);
  int heavy = 0;
  for (int p = h + 1; p <= spec.length; ++p)
    if (word[p - 1] == spec.depth && !(bad >> p & 1)) ++heavy;
  return heavy >= spec.min_heavy;
}

BigInt tail_heavy_count(const TailHeavySpec& spec) {
  spec.validate();
  const int t = spec.tail, q = spec.depth, h = spec.length - t;
  if (spec.min_heavy > t) return 0;
  std::uint64_t tail_mask = 0;
  for (int p = h + 1; p <= spec.length; ++p) tail_mask |= std::uint64_t{1} << p;

  // by_free[u]: heads leaving exactly u tail positions where q may count
  std::vector<std::uint64_t> by_free(t + 1, 0);
  std::vector<int> w(h + 1, 0);
  tally_heads(1, h, q, w, 0, tail_mask, by_free);

  BigInt total = 0;
  for (int u = spec.min_heavy; u <= t; ++u) {
    if (!by_free[u]) continue;
    // choose which of the u open positions hold q, fill the rest freely
    BigInt tails = 0;
    BigInt choose = 1;  // C(u, k)
    for (int k = 0; k <= u; ++k) {
      if (k >= spec.min_heavy)
        tails += choose * pow_int(q - 1, static_cast<unsigned>(u - k));
      choose = choose * (u - k) / (k + 1);
    }
    total += tails * pow_int(q, static_cast<unsigned>(t - u)) * by_free[u];
  }
  return total;
}

}  // namespace kunzlab
