#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kunzlab/exact.hpp"
#include "kunzlab/kunz_word.hpp"

namespace kunzlab {

/// Number of stressed depth-3 words of the given length (last entry 3).
/// Counted by a subset-sum search over the positions of the 1s; length <= 62.
BigInt count_stressed3(int length);

/// Total genus over all stressed depth-3 words of the given length.
BigInt stressed3_genus_sum(int length);

/// Average genus of stressed depth-3 words; length <= 40.
Rational stressed3_avg_genus(int length);

/// Depth-2 words with Frobenius number f and the given length.
BigInt closed_k2(int f, int length);
/// Depth-3 words with Frobenius number f and the given length.
BigInt closed_k3(int f, int length);

enum class MedRoute { direct, via_contains };

/// MED semigroups with Frobenius number f, optionally of fixed depth.
/// `direct` enumerates MED words; `via_contains` sums, over the admissible
/// multiplicities m, the semigroups with Frobenius number f - m containing m.
BigInt med_count(int f, std::optional<int> depth = std::nullopt, MedRoute route = MedRoute::direct);

/// sum_{k=1}^{floor((f-1)/2)} Fr(k), which equals the depth-2 MED count.
BigInt med2_partial_frobenius_sum(int f);

/// Words of length `length` with w_j = q built from the per-position
/// intervals of the depth-q lower-bound construction.
struct LowerBoundFamily {
  int depth;
  int length;
  int peak;  // the position j holding the value q
  /// Closed interval [lo, hi] allowed at 1-based position i.
  std::pair<int, int> interval(int i) const;
  /// Product of interval sizes.
  BigInt product_count() const;
  /// The same count from the floor-product formula.
  BigInt formula_count() const;
  /// Visits all words of the family in lexicographic order.
  void for_each(const std::function<void(std::span<const int>)>& visit) const;
};

/// Throws std::invalid_argument unless q >= 3 and 1 <= j <= length.
LowerBoundFamily lower_bound_family(int depth, int length, int peak);

/// Maps [n] -> {1,2,3} with no i + j <= n where colors of i and j are 1 and
/// the color of i + j is 3.
BigInt schur_colorings(int n);

struct TailHeavySpec {
  int length;
  int tail;
  int depth;
  /// Minimum number of depth-valued tail entries; floor(sqrt(length)) + 1.
  int min_heavy;

  static TailHeavySpec make(int length, int tail, int depth);
  void validate() const;
};

/// Words in [q]^length with at least `min_heavy` tail positions equal to q
/// whose head sums x + y (x, y in the head) all satisfy w_x + w_y >= q.
BigInt tail_heavy_count(const TailHeavySpec& spec);
bool is_tail_heavy(std::span<const int> word, const TailHeavySpec& spec);

}  // namespace kunzlab
