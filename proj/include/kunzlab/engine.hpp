#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "kunzlab/count_query.hpp"
#include "kunzlab/exact.hpp"
#include "kunzlab/kunz_word.hpp"

namespace kunzlab {

using ExactCount = BigInt;

/// Number of Kunz words selected by the query. The trivial semigroup (empty
/// word) is never counted. Throws std::invalid_argument on unbounded queries.
ExactCount count(const CountQuery& query, const CountOptions& options = {});

/// Words of the query in lexicographic order, one at a time.
class WordStream {
 public:
  explicit WordStream(const CountQuery& query);
  ~WordStream();
  WordStream(WordStream&&) noexcept;
  WordStream& operator=(WordStream&&) noexcept;

  std::optional<KunzWord> next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<KunzWord> enumerate(const CountQuery& query);

/// Visits every word of the query without materialising it. Words arrive
/// grouped by length (shortest first), lexicographic within a length.
void for_each_word(const CountQuery& query, const std::function<void(std::span<const int>)>& visit);

}  // namespace kunzlab
