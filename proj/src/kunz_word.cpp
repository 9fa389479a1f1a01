#include "kunzlab/kunz_word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace kunzlab {
namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument(std::string("bad ") + std::string(what) + " entry '" +
                                    std::string(tok) + "'");
      out.push_back(v);
    } else if (comma != text.size()) {
      // "12," is allowed, ",," is not
      if (comma + 1 != text.size() || pos == 0)
        throw std::invalid_argument(std::string("empty ") + std::string(what) + " entry");
    }
    pos = comma + 1;
  }
  return out;
}

std::string join(std::span<const int> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

}  // namespace

KunzWord::KunzWord(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 1) throw std::invalid_argument("Kunz word entries must be positive");
}

KunzWord KunzWord::checked(std::vector<int> entries) {
  KunzWord w(std::move(entries));
  if (!is_kunz(w)) throw std::invalid_argument("not a Kunz word: " + w.str());
  return w;
}

KunzWord KunzWord::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\n')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.find(',') != std::string_view::npos) return KunzWord(parse_int_list(text, "word"));
  std::vector<int> entries;
  for (char c : text) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("bad character in compact Kunz word: '" + std::string(1, c) + "'");
    entries.push_back(c - '0');
  }
  return KunzWord(std::move(entries));
}

std::string KunzWord::str() const { return join(entries_); }

std::string KunzWord::compact() const {
  std::string s;
  for (int e : entries_) {
    if (e > 9) return str();
    s += static_cast<char>('0' + e);
  }
  return s;
}

GapSet::GapSet(std::vector<int> gaps) : gaps_(std::move(gaps)) {
  std::sort(gaps_.begin(), gaps_.end());
  gaps_.erase(std::unique(gaps_.begin(), gaps_.end()), gaps_.end());
  if (!gaps_.empty() && gaps_.front() < 1) throw std::invalid_argument("gaps must be positive");
}

GapSet GapSet::parse(std::string_view text) { return GapSet(parse_int_list(text, "gap")); }

bool GapSet::is_gap(int n) const { return std::binary_search(gaps_.begin(), gaps_.end(), n); }

int GapSet::multiplicity() const {
  int n = 1;
  for (int g : gaps_) {
    if (g != n) break;
    ++n;
  }
  return n;
}

bool GapSet::is_valid() const {
  const int f = frobenius();
  if (f < 0) return true;
  std::vector<char> gap(static_cast<std::size_t>(f) + 1, 0);
  for (int g : gaps_) gap[g] = 1;
  for (int x = 1; x <= f; ++x) {
    if (gap[x]) continue;
    for (int y = x; x + y <= f; ++y)
      if (!gap[y] && gap[x + y]) return false;
  }
  return true;
}

std::string GapSet::str() const { return join(gaps_); }

bool is_kunz(std::span<const int> w) {
  const std::size_t len = w.size();
  for (int e : w)
    if (e < 1) return false;
  // 1-based indices i <= j
  for (std::size_t i = 1; i <= len; ++i) {
    for (std::size_t j = i; j <= len; ++j) {
      const int s = w[i - 1] + w[j - 1];
      if (i + j <= len) {
        if (s < w[i + j - 1]) return false;
      } else if (i + j > len + 1) {
        if (s + 1 < w[i + j - len - 2]) return false;
      }
    }
  }
  return true;
}

bool is_kunz(const KunzWord& word) { return is_kunz(word.entries()); }

SemigroupInvariants invariants(const KunzWord& word) {
  if (!is_kunz(word)) throw std::invalid_argument("invariants: not a Kunz word: " + word.str());
  SemigroupInvariants inv;
  const int len = static_cast<int>(word.length());
  inv.multiplicity = len + 1;
  if (len == 0) return inv;
  int q = 0, j = 0;
  for (int i = 1; i <= len; ++i) {
    const int e = word.entry(i);
    inv.genus += e;
    if (e >= q) {
      q = e;
      j = i;
    }
  }
  inv.depth = q;
  inv.frobenius = (len + 1) * (q - 1) + j;
  return inv;
}

bool contains(std::span<const int> w, long n) {
  if (n < 0) return false;
  const long m = static_cast<long>(w.size()) + 1;
  const long r = n % m;
  if (r == 0) return true;
  return w[static_cast<std::size_t>(r) - 1] <= n / m;
}

bool contains(const KunzWord& word, long n) { return contains(word.entries(), n); }

KunzWord word_from_gaps(const GapSet& gaps) {
  if (!gaps.is_valid())
    throw std::invalid_argument("word_from_gaps: complement of {" + gaps.str() +
                                "} is not closed under addition");
  const int m = gaps.multiplicity();
  std::vector<int> w(static_cast<std::size_t>(m) - 1);
  for (int i = 1; i < m; ++i) {
    int n = i;
    while (gaps.is_gap(n)) n += m;
    w[i - 1] = (n - i) / m;
  }
  return KunzWord(std::move(w));
}

GapSet gaps_from_word(const KunzWord& word) {
  const int f = invariants(word).frobenius;
  std::vector<int> gaps;
  for (int n = 1; n <= f; ++n)
    if (!contains(word, n)) gaps.push_back(n);
  return GapSet(std::move(gaps));
}

bool is_med(std::span<const int> w) {
  const std::size_t len = w.size();
  for (std::size_t i = 1; i <= len; ++i) {
    for (std::size_t j = i; j <= len; ++j) {
      const int s = w[i - 1] + w[j - 1];
      if (i + j <= len) {
        if (s <= w[i + j - 1]) return false;
      } else if (i + j > len + 1) {
        if (s + 1 <= w[i + j - len - 2]) return false;
      }
    }
  }
  return true;
}

bool is_med(const KunzWord& word) {
  if (!is_kunz(word)) throw std::invalid_argument("is_med: not a Kunz word: " + word.str());
  return is_med(word.entries());
}

KunzWord reduce_depth(const KunzWord& word) {
  const auto inv = invariants(word);
  if (inv.depth <= 1) throw std::invalid_argument("reduce_depth: depth must be at least 2");
  std::vector<int> v(word.entries().begin(), word.entries().end());
  for (int& e : v) e = std::min(e, inv.depth - 1);
  return KunzWord(std::move(v));
}

GapSet med_lift(const GapSet& gaps, int m) {
  if (m < 1) throw std::invalid_argument("med_lift: m must be positive");
  if (!gaps.is_valid()) throw std::invalid_argument("med_lift: not a semigroup gap set");
  if (gaps.is_gap(m)) throw std::invalid_argument("med_lift: semigroup does not contain m");
  std::vector<int> out;
  for (int i = 1; i < m; ++i) out.push_back(i);
  for (int g : gaps.values()) out.push_back(g + m);
  return GapSet(std::move(out));
}

std::pair<GapSet, int> med_drop(const GapSet& gaps) {
  if (!gaps.is_valid()) throw std::invalid_argument("med_drop: not a semigroup gap set");
  const int m = gaps.multiplicity();
  if (m < 2) throw std::invalid_argument("med_drop: multiplicity must be at least 2");
  if (!is_med(word_from_gaps(gaps))) throw std::invalid_argument("med_drop: semigroup is not MED");
  std::vector<int> out;
  for (int g : gaps.values())
    if (g > m) out.push_back(g - m);
  return {GapSet(std::move(out)), m};
}

}  // namespace kunzlab
