#include "kunzlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace kunzlab {

LabeledGraph::LabeledGraph(int vertices) {
  if (vertices < 0 || vertices > kMaxVertices) throw std::invalid_argument("vertex count out of range");
  adj_.assign(vertices, 0);
  colors_.assign(vertices, Color::blue);
  labels_.assign(vertices, std::nullopt);
}

int LabeledGraph::check(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
  return v;
}

int LabeledGraph::add_vertex(Color color, std::optional<int> label) {
  if (vertex_count() == kMaxVertices) throw std::length_error("graph vertex limit reached");
  adj_.push_back(0);
  colors_.push_back(color);
  labels_.push_back(label);
  return vertex_count() - 1;
}

bool LabeledGraph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (has_edge(u, v)) return false;
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
  return true;
}

bool LabeledGraph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return false;
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
  return true;
}

bool LabeledGraph::has_edge(int u, int v) const { return adj_[check(u)] >> check(v) & 1; }

int LabeledGraph::degree(int v) const {
  return std::popcount(adj_[check(v)]) + (has_edge(v, v) ? 1 : 0);
}

int LabeledGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < vertex_count(); ++v) twice += degree(v);
  return twice / 2;
}

int LabeledGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool LabeledGraph::has_loops() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (has_edge(v, v)) return true;
  return false;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u; v < vertex_count(); ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::string LabeledGraph::to_text() const {
  std::ostringstream os;
  os << "# vertices: " << vertex_count() << '\n';
  std::string reds;
  for (int v = 0; v < vertex_count(); ++v)
    if (colors_[v] == Color::red) reds += ' ' + std::to_string(v);
  if (!reds.empty()) os << "# red:" << reds << '\n';
  if (std::any_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); })) {
    os << "# labels:";
    for (const auto& l : labels_) os << ' ' << (l ? std::to_string(*l) : std::string("-"));
    os << '\n';
  }
  for (auto [u, v] : edges()) os << u << ' ' << v << '\n';
  return os.str();
}

namespace {

int parse_int(std::string_view tok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad integer '" + std::string(tok) + "' in graph text");
  return v;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

LabeledGraph LabeledGraph::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::optional<int> n;
  std::vector<int> reds;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edge_list;
  for (std::string line; std::getline(is, line);) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(1, colon - 1);
      key.erase(0, key.find_first_not_of(' '));
      const auto toks = split_ws(line.substr(colon + 1));
      if (key == "vertices") {
        if (toks.size() != 1) throw std::invalid_argument("bad vertices header");
        n = parse_int(toks[0]);
      } else if (key == "red") {
        for (const auto& t : toks) reds.push_back(parse_int(t));
      } else if (key == "labels") {
        labels = toks;
      }
      continue;
    }
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw std::invalid_argument("edge lines need exactly two vertices: '" + line + "'");
    edge_list.emplace_back(parse_int(toks[0]), parse_int(toks[1]));
  }
  int count = n.value_or(0);
  if (!n)
    for (auto [u, v] : edge_list) count = std::max({count, u + 1, v + 1});
  LabeledGraph g(count);
  for (int r : reds) g.set_color(r, Color::red);
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != count) throw std::invalid_argument("label count mismatch");
    for (int v = 0; v < count; ++v)
      if (labels[v] != "-") g.labels_[v] = parse_int(labels[v]);
  }
  for (auto [u, v] : edge_list)
    if (!g.add_edge(u, v)) throw std::invalid_argument("duplicate edge in graph text");
  return g;
}

LabeledGraph threshold_graph(const std::vector<int>& labels, int lambda) {
  if (labels.empty()) throw std::invalid_argument("threshold graph needs at least one label");
  LabeledGraph g;
  for (int l : labels) g.add_vertex(Color::blue, l);
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (labels[u] + labels[v] >= lambda) g.add_edge(u, v);
  return g;
}

LabeledGraph threshold_graph(int q) {
  if (q < 1) throw std::invalid_argument("threshold graph needs q >= 1");
  std::vector<int> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = i + 1;
  return threshold_graph(labels, q);
}

LabeledGraph complete_bipartite(int left, int right) {
  LabeledGraph g(left + right);
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) g.add_edge(u, left + v);
  return g;
}

namespace {

// Counts maps of the free vertices (fixed[v] < 0) compatible with the fixed
// ones, one connected component at a time.
BigInt count_homs(const LabeledGraph& g, const LabeledGraph& h, const std::vector<int>& fixed) {
  const int n = g.vertex_count();
  const int hn = h.vertex_count();
  const std::uint64_t all = hn == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hn) - 1;
  std::uint64_t looped = 0;
  for (int x = 0; x < hn; ++x)
    if (h.has_edge(x, x)) looped |= std::uint64_t{1} << x;

  std::vector<std::uint64_t> base(n, all);
  for (int v = 0; v < n; ++v) {
    if (fixed[v] >= 0) {
      for (int u = v; u < n; ++u)
        if (fixed[u] >= 0 && g.has_edge(u, v) && !h.has_edge(fixed[u], fixed[v])) return 0;
      continue;
    }
    if (g.has_edge(v, v)) base[v] &= looped;
    for (int u = 0; u < n; ++u)
      if (fixed[u] >= 0 && g.has_edge(u, v)) base[v] &= h.neighbours(fixed[u]);
  }

  BigInt total = 1;
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (fixed[root] >= 0 || seen[root]) continue;
    // breadth-first order so each later vertex has an earlier neighbour
    std::vector<int> order{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int u = 0; u < n; ++u)
        if (fixed[u] < 0 && !seen[u] && g.has_edge(order[i], u)) {
          seen[u] = 1;
          order.push_back(u);
        }
    const int k = static_cast<int>(order.size());
    std::vector<std::vector<int>> earlier(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j)
        if (g.has_edge(order[i], order[j])) earlier[i].push_back(j);

    std::vector<int> image(k, 0);
    auto rec = [&](auto&& self, int i) -> std::uint64_t {
      std::uint64_t mask = base[order[i]];
      for (int j : earlier[i]) mask &= h.neighbours(image[j]);
      if (i == k - 1) return static_cast<std::uint64_t>(std::popcount(mask));
      std::uint64_t sum = 0;
      while (mask) {
        image[i] = std::countr_zero(mask);
        mask &= mask - 1;
        if (__builtin_add_overflow(sum, self(self, i + 1), &sum))
          throw std::overflow_error("homomorphism count exceeds 64 bits per component");
      }
      return sum;
    };
    total *= rec(rec, 0);
    if (total == 0) return 0;
  }
  return total;
}

}  // namespace

BigInt hom_count(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.vertex_count() > kHomGuard)
    throw std::length_error("hom_count supports at most " + std::to_string(kHomGuard) + " source vertices");
  return count_homs(g, h, std::vector<int>(g.vertex_count(), -1));
}

BigInt admissible_hom_count(const LabeledGraph& g, const LabeledGraph& h, int target) {
  if (target < 0 || target >= h.vertex_count()) throw std::out_of_range("target vertex out of range");
  std::vector<int> fixed(g.vertex_count(), -1);
  int free = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.color(v) == Color::red) fixed[v] = target;
    else ++free;
  }
  if (free > kHomGuard)
    throw std::length_error("admissible_hom_count supports at most " + std::to_string(kHomGuard) + " blue vertices");
  return count_homs(g, h, fixed);
}

BigInt hom_kdd(int d, int q) {
  if (d < 1 || q < 1) throw std::invalid_argument("hom_kdd needs d, q >= 1");
  // tuples over [x, q] with minimum exactly x
  std::vector<BigInt> with_min(q + 1);
  for (int x = 1; x <= q; ++x)
    with_min[x] = pow_int(q - x + 1, static_cast<unsigned>(d)) - pow_int(q - x, static_cast<unsigned>(d));
  BigInt total = 0;
  for (int a = 1; a <= q; ++a)
    for (int b = std::max(1, q - a); b <= q; ++b) total += with_min[a] * with_min[b];
  return total;
}

long discrepancy(const LabeledGraph& g, int d) {
  return static_cast<long>(d) * g.vertex_count() - 2L * g.edge_count();
}

long discrepancy_by_degrees(const LabeledGraph& g, int d) {
  long total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += d - g.degree(v);
  return total;
}

Rational regularize_vertex_bound(const LabeledGraph& g, int d) {
  if (d < 1) throw std::invalid_argument("regularize needs d >= 1");
  const Rational spread = Rational(3) + Rational(discrepancy(g, d), d);
  const Rational gadget = 2 * ((d + 1) / 2);
  return 1 + std::max(spread, gadget) + g.vertex_count();
}

LabeledGraph regularize(const LabeledGraph& g, int d) {
  if (d < 1) throw std::invalid_argument("regularize needs d >= 1");
  if (g.has_loops()) throw std::invalid_argument("regularize needs a loop-free graph");
  if (g.max_degree() > d) throw std::invalid_argument("regularize needs maximum degree at most d");

  LabeledGraph out = g;
  for (int v = 0; v < out.vertex_count(); ++v) out.set_color(v, Color::blue);

  // (1) even vertex count
  if (out.vertex_count() % 2) out.add_vertex(Color::blue);

  // (2) drop blue-blue edges, lexicographically first, until d divides D
  long disc = discrepancy(out, d);
  while (disc % d != 0) {
    const auto es = out.edges();
    if (es.empty()) throw std::logic_error("regularize: ran out of edges to remove");
    out.remove_edge(es.front().first, es.front().second);
    disc += 2;
  }
  // Already regular. For even d no simple gadget with zero discrepancy exists.
  if (disc == 0 && d % 2 == 0) return out;

  // (3) red gadget
  const long spread = disc / d;
  const long reds = spread > d ? spread : 2 * ((d + 1) / 2);
  const int first_red = out.vertex_count();
  for (long i = 0; i < reds; ++i) out.add_vertex(Color::red);
  const int last_red = out.vertex_count();

  auto reds_by_degree = [&](int except) {
    std::vector<int> rs;
    for (int r = first_red; r < last_red; ++r)
      if (r != except) rs.push_back(r);
    std::stable_sort(rs.begin(), rs.end(), [&](int a, int b) { return out.degree(a) < out.degree(b); });
    return rs;
  };

  // (4) top up blue vertices from the least-loaded reds
  for (int v = 0; v < first_red; ++v) {
    const int need = d - out.degree(v);
    if (need <= 0) continue;
    const auto rs = reds_by_degree(-1);
    if (static_cast<int>(rs.size()) < need) throw std::logic_error("regularize: too few red vertices");
    for (int i = 0; i < need; ++i) out.add_edge(v, rs[i]);
  }

  // (5) pair up red vertices of least degree. The least-degree red is joined
  // to the next least-degree reds at once, which always completes.
  while (true) {
    int v = -1;
    for (int r = first_red; r < last_red; ++r)
      if (out.degree(r) < d && (v < 0 || out.degree(r) < out.degree(v))) v = r;
    if (v < 0) break;
    const int need = d - out.degree(v);
    std::vector<int> partners;
    for (int r : reds_by_degree(v))
      if (out.degree(r) < d && !out.has_edge(v, r)) partners.push_back(r);
    if (static_cast<int>(partners.size()) < need)
      throw std::logic_error("regularize: red gadget cannot be completed");
    for (int i = 0; i < need; ++i) out.add_edge(v, partners[i]);
  }
  return out;
}

LabeledGraph heavy_index_graph(int h, const std::vector<int>& positions) {
  if (h < 1) throw std::invalid_argument("heavy_index_graph needs h >= 1");
  LabeledGraph g;
  for (int x = 1; x <= h; ++x) g.add_vertex(Color::blue, x);
  // x = y would be a loop; those pairs are left to the degree bookkeeping
  for (int x = 1; x <= h; ++x)
    for (int y = x + 1; y <= h; ++y)
      if (std::find(positions.begin(), positions.end(), x + y) != positions.end()) g.add_edge(x - 1, y - 1);
  return g;
}

std::vector<LabeledGraph> regular_graphs(int n, int d) {
  std::vector<LabeledGraph> out;
  if (n < 0 || d < 0) return out;
  if (d == 0) {
    out.emplace_back(n);
    return out;
  }
  if (d >= n || (n * d) % 2) return out;

  LabeledGraph g(n);
  for (int v = 1; v <= d; ++v) g.add_edge(0, v);

  // Fill vertex v's remaining degree from higher vertices, then move on.
  auto fill = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(g);
      return;
    }
    const int need = d - g.degree(v);
    if (need == 0) {
      self(self, v + 1);
      return;
    }
    std::vector<int> open;
    for (int w = v + 1; w < n; ++w)
      if (g.degree(w) < d) open.push_back(w);
    if (static_cast<int>(open.size()) < need) return;
    std::vector<int> pick(need);
    auto choose = [&](auto&& again, int idx, int from) -> void {
      if (idx == need) {
        for (int w : pick) g.add_edge(v, w);
        self(self, v + 1);
        for (int w : pick) g.remove_edge(v, w);
        return;
      }
      for (int i = from; i < static_cast<int>(open.size()); ++i) {
        pick[idx] = open[i];
        again(again, idx + 1, i + 1);
      }
    };
    choose(choose, 0, 0);
  };
  fill(fill, 1);
  return out;
}

}  // namespace kunzlab
