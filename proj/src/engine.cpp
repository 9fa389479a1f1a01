#include "kunzlab/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <thread>

#include "kunzlab/families.hpp"

namespace kunzlab {
namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Static constraints for words of one length. Index 0 of lo/hi is unused.
struct LengthPlan {
  int length = 0;
  std::vector<int> lo, hi;
  int pinned_pos = 0;
  int pinned_val = 0;
  // When nonzero, some entry must equal this value (the maximum).
  int require_value = 0;
  int strict = 0;
};

std::optional<LengthPlan> plan_for_length(const CountQuery& query, int len) {
  if (len < 1) return std::nullopt;
  LengthPlan p;
  p.length = len;
  p.strict = query.med ? 1 : 0;
  p.lo.assign(len + 1, 1);
  p.hi.assign(len + 1, kUnbounded);
  const int m = len + 1;

  if (query.frobenius) {
    const int f = *query.frobenius;
    if (f < 1) return std::nullopt;
    const int depth = (f + 1 + m - 1) / m;
    const int j = f - m * (depth - 1);
    if (j == 0) return std::nullopt;
    if (query.depth_exact && *query.depth_exact != depth) return std::nullopt;
    if (query.depth_max && *query.depth_max < depth) return std::nullopt;
    if (query.stressed && j != len) return std::nullopt;
    if (depth == 1 && j < len) return std::nullopt;
    for (int i = 1; i <= len; ++i) p.hi[i] = i <= j ? depth : depth - 1;
    p.pinned_pos = j;
    p.pinned_val = depth;
  } else {
    int cap = kUnbounded;
    if (query.depth_max) cap = *query.depth_max;
    if (query.depth_exact) {
      if (*query.depth_exact > cap) return std::nullopt;
      cap = *query.depth_exact;
    }
    if (cap < 1) return std::nullopt;
    for (int i = 1; i <= len; ++i) p.hi[i] = cap;
    if (query.stressed) {
      p.pinned_pos = len;
      p.pinned_val = cap;
    } else if (query.depth_exact && cap > 1) {
      p.require_value = cap;
    }
  }
  if (p.pinned_pos) p.lo[p.pinned_pos] = p.hi[p.pinned_pos] = p.pinned_val;

  if (query.contains) {
    const int n = *query.contains;
    const int r = n % m;
    if (r != 0) p.hi[r] = std::min(p.hi[r], n / m);
  }
  for (int i = 1; i <= len; ++i)
    if (p.lo[i] > p.hi[i]) return std::nullopt;
  return p;
}

std::vector<LengthPlan> build_plans(const CountQuery& query) {
  query.validate();
  std::vector<LengthPlan> plans;
  int first = 1, last = 0;
  if (query.length) {
    first = last = *query.length;
  } else {
    first = 1;
    last = *query.frobenius;
  }
  for (int len = first; len <= last; ++len)
    if (auto p = plan_for_length(query, len)) plans.push_back(std::move(*p));
  return plans;
}

// Admissible interval for position k given w[1..k-1]. Exact for every Kunz
// condition whose largest index is k; the pinned-entry lookahead only prunes.
inline std::pair<int, int> bounds_at(const LengthPlan& p, const int* w, int k) {
  const int len = p.length;
  int lo = p.lo[k], hi = p.hi[k];
  for (int i = 1; 2 * i <= k; ++i) hi = std::min(hi, w[i] + w[k - i] - p.strict);
  for (int i = std::max(1, len + 2 - k); i < k; ++i)
    lo = std::max(lo, w[i + k - len - 1] - w[i] - 1 + p.strict);
  if (2 * k >= len + 2) {
    const int need = w[2 * k - len - 1] - 1 + p.strict;
    lo = std::max(lo, (need + 1) / 2);
  }
  if (p.pinned_pos > k) {
    const int a = p.pinned_pos - k;
    if (a < k) lo = std::max(lo, p.pinned_val - w[a] + p.strict);
    else if (a == k) lo = std::max(lo, (p.pinned_val + p.strict + 1) / 2);
  }
  return {lo, hi};
}

// Completions of w[1..k-1]; `top` is the prefix maximum.
std::uint64_t count_from(const LengthPlan& p, int* w, int k, int top) {
  const auto [lo, hi] = bounds_at(p, w, k);
  if (lo > hi) return 0;
  if (k == p.length) {
    if (p.require_value && top < p.require_value)
      return (lo <= p.require_value && p.require_value <= hi) ? 1 : 0;
    return static_cast<std::uint64_t>(hi - lo + 1);
  }
  std::uint64_t total = 0;
  for (int v = lo; v <= hi; ++v) {
    w[k] = v;
    const std::uint64_t sub = count_from(p, w, k + 1, std::max(top, v));
    if (__builtin_add_overflow(total, sub, &total)) throw std::overflow_error("count exceeds 64 bits per task");
  }
  return total;
}

void collect_prefixes(const LengthPlan& p, int* w, int k, int depth, std::vector<int>& out) {
  if (k > depth) {
    out.insert(out.end(), w + 1, w + depth + 1);
    return;
  }
  const auto [lo, hi] = bounds_at(p, w, k);
  for (int v = lo; v <= hi; ++v) {
    w[k] = v;
    collect_prefixes(p, w, k + 1, depth, out);
  }
}

struct Task {
  std::size_t plan;
  int depth;
  std::size_t offset;  // into the plan's prefix buffer
};

BigInt count_generic(const std::vector<LengthPlan>& plans, unsigned threads) {
  if (threads <= 1) {
    BigInt total = 0;
    for (const auto& p : plans) {
      std::vector<int> w(p.length + 1, 0);
      total += count_from(p, w.data(), 1, 0);
    }
    return total;
  }

  // Split each length on a prefix long enough to give every worker many tasks.
  std::vector<std::vector<int>> buffers(plans.size());
  std::vector<Task> tasks;
  const std::size_t target = 64 * static_cast<std::size_t>(threads);
  for (std::size_t pi = 0; pi < plans.size(); ++pi) {
    const auto& p = plans[pi];
    std::vector<int> w(p.length + 1, 0);
    int depth = 0;
    std::vector<int> prefixes;
    for (int d = 1; d < p.length; ++d) {
      prefixes.clear();
      collect_prefixes(p, w.data(), 1, d, prefixes);
      depth = d;
      if (prefixes.size() / d >= target) break;
    }
    if (depth == 0) {
      tasks.push_back({pi, 0, 0});
      continue;
    }
    for (std::size_t off = 0; off < prefixes.size(); off += depth) tasks.push_back({pi, depth, off});
    buffers[pi] = std::move(prefixes);
  }

  std::vector<std::uint64_t> results(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t t = next++; t < tasks.size(); t = next++) {
        const Task& task = tasks[t];
        const auto& p = plans[task.plan];
        std::vector<int> w(p.length + 1, 0);
        int top = 0;
        for (int i = 1; i <= task.depth; ++i) {
          w[i] = buffers[task.plan][task.offset + i - 1];
          top = std::max(top, w[i]);
        }
        results[t] = count_from(p, w.data(), task.depth + 1, top);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = tasks.size();
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1));
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  BigInt total = 0;
  for (auto r : results) total += r;
  return total;
}

// Words of length len with every entry <= cap, depth <= 3 only.
BigInt capped_total(int len, int cap) {
  if (cap <= 0) return 0;
  if (cap == 1) return 1;
  BigInt total = pow2(static_cast<unsigned>(len));
  if (cap == 2) return total;
  // split on the position of the last 3
  for (int j = 1; j <= len; ++j) total += pow2(static_cast<unsigned>(len - j)) * count_stressed3(j);
  return total;
}

std::optional<BigInt> fast_path(const CountQuery& q) {
  if (q.frobenius || !q.length || q.med || q.contains) return std::nullopt;
  const int len = *q.length;
  if (len < 1) return BigInt(0);
  int cap = q.depth_max ? *q.depth_max : kUnbounded;
  if (q.depth_exact) {
    if (*q.depth_exact > cap) return BigInt(0);
    cap = *q.depth_exact;
  }
  if (cap > 3) return std::nullopt;
  if (cap < 1) return BigInt(0);
  if (!q.depth_exact) return capped_total(len, cap);
  if (q.stressed) {
    if (cap == 1) return BigInt(1);
    if (cap == 2) return pow2(static_cast<unsigned>(len - 1));
    return count_stressed3(len);
  }
  return BigInt(capped_total(len, cap) - capped_total(len, cap - 1));
}

class Cursor {
 public:
  explicit Cursor(const LengthPlan& plan) : p_(plan), w_(plan.length + 1, 0), hi_(plan.length + 1, 0) {}

  bool next() {
    const int len = p_.length;
    int k;
    bool ok;
    if (!started_) {
      started_ = true;
      k = 1;
      ok = open(1);
    } else {
      k = len;
      ok = ++w_[k] <= hi_[k];
    }
    while (true) {
      if (ok) {
        if (k == len) {
          if (leaf_ok()) return true;
          ok = ++w_[k] <= hi_[k];
          continue;
        }
        ++k;
        ok = open(k);
      } else {
        if (--k == 0) return false;
        ok = ++w_[k] <= hi_[k];
      }
    }
  }

  std::span<const int> word() const { return {w_.data() + 1, static_cast<std::size_t>(p_.length)}; }

 private:
  bool open(int k) {
    const auto [lo, hi] = bounds_at(p_, w_.data(), k);
    w_[k] = lo;
    hi_[k] = hi;
    return lo <= hi;
  }
  bool leaf_ok() const {
    if (!p_.require_value) return true;
    return *std::max_element(w_.begin() + 1, w_.end()) == p_.require_value;
  }

  const LengthPlan& p_;
  std::vector<int> w_, hi_;
  bool started_ = false;
};

}  // namespace

ExactCount count(const CountQuery& query, const CountOptions& options) {
  query.validate();
  if (options.allow_fast_paths)
    if (auto fast = fast_path(query)) return *fast;
  const auto plans = build_plans(query);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  return count_generic(plans, std::max(1u, threads));
}

struct WordStream::Impl {
  std::vector<LengthPlan> plans;
  std::vector<Cursor> cursors;
  // min-heap of cursor indices keyed on the current word
  std::vector<std::size_t> heap;

  bool later(std::size_t a, std::size_t b) const {
    const auto wa = cursors[a].word(), wb = cursors[b].word();
    return std::lexicographical_compare(wb.begin(), wb.end(), wa.begin(), wa.end());
  }
};

WordStream::WordStream(const CountQuery& query) : impl_(std::make_unique<Impl>()) {
  impl_->plans = build_plans(query);
  impl_->cursors.reserve(impl_->plans.size());
  for (const auto& p : impl_->plans) impl_->cursors.emplace_back(p);
  auto cmp = [this](std::size_t a, std::size_t b) { return impl_->later(a, b); };
  for (std::size_t i = 0; i < impl_->cursors.size(); ++i)
    if (impl_->cursors[i].next()) {
      impl_->heap.push_back(i);
      std::push_heap(impl_->heap.begin(), impl_->heap.end(), cmp);
    }
}

WordStream::~WordStream() = default;
WordStream::WordStream(WordStream&&) noexcept = default;
WordStream& WordStream::operator=(WordStream&&) noexcept = default;

std::optional<KunzWord> WordStream::next() {
  auto& heap = impl_->heap;
  if (heap.empty()) return std::nullopt;
  auto cmp = [this](std::size_t a, std::size_t b) { return impl_->later(a, b); };
  std::pop_heap(heap.begin(), heap.end(), cmp);
  const std::size_t i = heap.back();
  heap.pop_back();
  const auto w = impl_->cursors[i].word();
  KunzWord out(std::vector<int>(w.begin(), w.end()));
  if (impl_->cursors[i].next()) {
    heap.push_back(i);
    std::push_heap(heap.begin(), heap.end(), cmp);
  }
  return out;
}

std::vector<KunzWord> enumerate(const CountQuery& query) {
  std::vector<KunzWord> out;
  WordStream stream(query);
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

void for_each_word(const CountQuery& query, const std::function<void(std::span<const int>)>& visit) {
  for (const auto& p : build_plans(query)) {
    Cursor c(p);
    while (c.next()) visit(c.word());
  }
}

}  // namespace kunzlab
