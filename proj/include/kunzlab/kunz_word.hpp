#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kunzlab {

/// Kunz word w_1 ... w_l of a numerical semigroup with multiplicity l + 1:
/// (l + 1) * w_i + i is the least semigroup element congruent to i.
/// The empty word encodes N_0 itself.
///
/// Construction only checks positivity; use `is_kunz` (or `checked`) for the
/// Kunz conditions.
class KunzWord {
 public:
  KunzWord() = default;
  explicit KunzWord(std::vector<int> entries);
  KunzWord(std::initializer_list<int> entries) : KunzWord(std::vector<int>(entries)) {}

  /// Throws std::invalid_argument unless the entries form a valid Kunz word.
  static KunzWord checked(std::vector<int> entries);

  /// Accepts "3,1,2,2,1" (canonical) or the compact digit form "31221".
  /// A single multi-digit entry needs a trailing comma: "12," is the word (12).
  static KunzWord parse(std::string_view text);

  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  /// 1-based access, matching the usual w_i indexing.
  int entry(std::size_t i) const { return entries_[i - 1]; }
  std::span<const int> entries() const { return entries_; }

  /// Canonical comma-separated form.
  std::string str() const;
  /// Digit-string form when every entry is a single digit, else canonical.
  std::string compact() const;

  friend auto operator<=>(const KunzWord&, const KunzWord&) = default;

 private:
  std::vector<int> entries_;
};

/// Gap set of a numerical semigroup: the finite set N_0 \ semigroup.
class GapSet {
 public:
  GapSet() = default;
  /// Sorts and deduplicates; entries must be positive.
  explicit GapSet(std::vector<int> gaps);
  GapSet(std::initializer_list<int> gaps) : GapSet(std::vector<int>(gaps)) {}

  static GapSet parse(std::string_view text);

  const std::vector<int>& values() const { return gaps_; }
  std::size_t size() const { return gaps_.size(); }
  bool empty() const { return gaps_.empty(); }
  bool is_gap(int n) const;
  /// Largest gap, -1 for the empty set.
  int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  /// Least positive non-gap.
  int multiplicity() const;
  /// True when the complement is closed under addition.
  bool is_valid() const;

  std::string str() const;

  friend bool operator==(const GapSet&, const GapSet&) = default;

 private:
  std::vector<int> gaps_;
};

struct SemigroupInvariants {
  int multiplicity = 1;
  int genus = 0;
  int depth = 0;
  int frobenius = -1;

  friend bool operator==(const SemigroupInvariants&, const SemigroupInvariants&) = default;
};

/// Largest Frobenius number of a depth-q word of length l: (l + 1) q - 1.
inline long stressed_frobenius(int depth, int length) {
  return static_cast<long>(length + 1) * depth - 1;
}

bool is_kunz(const KunzWord& word);
bool is_kunz(std::span<const int> entries);

/// Reads (m, g, q, f) off a Kunz word. Throws std::invalid_argument for
/// non-Kunz input.
SemigroupInvariants invariants(const KunzWord& word);

/// Membership of n in the semigroup encoded by a Kunz word.
bool contains(const KunzWord& word, long n);
bool contains(std::span<const int> entries, long n);

KunzWord word_from_gaps(const GapSet& gaps);
GapSet gaps_from_word(const KunzWord& word);

/// Maximal embedding dimension test via the strict Kunz inequalities.
bool is_med(const KunzWord& word);
bool is_med(std::span<const int> entries);

/// v_i = min(q - 1, w_i) for a Kunz word of depth q >= 2.
KunzWord reduce_depth(const KunzWord& word);

/// {0} u (m + S) for the semigroup S with the given gaps; requires m in S.
GapSet med_lift(const GapSet& gaps, int m);
/// Inverse of med_lift on MED semigroups of multiplicity >= 2.
std::pair<GapSet, int> med_drop(const GapSet& gaps);

}  // namespace kunzlab
