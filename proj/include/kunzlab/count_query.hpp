#pragma once

#include <optional>
#include <string>

namespace kunzlab {

/// Selects a family of Kunz words. Lengths are word lengths (multiplicity
/// minus one); `contains` asks that the encoded semigroup contain that value.
struct CountQuery {
  std::optional<int> frobenius;
  std::optional<int> length;
  std::optional<int> depth_max;
  std::optional<int> depth_exact;
  /// Last entry equals depth_exact.
  bool stressed = false;
  bool med = false;
  std::optional<int> contains;

  /// True when the family is finite: a Frobenius number, or a length together
  /// with a depth cap.
  bool is_finite() const;
  /// Throws std::invalid_argument on malformed or unbounded queries.
  void validate() const;
  /// Stable one-line description, e.g. "f=29 len=9".
  std::string describe() const;

  friend bool operator==(const CountQuery&, const CountQuery&) = default;
};

struct CountOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Disables the depth <= 3 shortcuts so the generic search can be compared
  /// against them.
  bool allow_fast_paths = true;
};

}  // namespace kunzlab
