#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kunzlab/exact.hpp"

namespace kunzlab {

enum class Color { blue, red };

/// Simple graph on at most 64 vertices, loops allowed, with an optional
/// integer label and a colour per vertex.
class LabeledGraph {
 public:
  static constexpr int kMaxVertices = 64;

  LabeledGraph() = default;
  explicit LabeledGraph(int vertices);

  int add_vertex(Color color = Color::blue, std::optional<int> label = std::nullopt);
  /// Returns false if the edge was already present.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  /// A loop adds 2.
  int degree(int v) const;
  int max_degree() const;
  bool has_loops() const;
  /// Sorted (u <= v) edge list.
  std::vector<std::pair<int, int>> edges() const;
  std::uint64_t neighbours(int v) const { return adj_[check(v)]; }

  Color color(int v) const { return colors_[check(v)]; }
  void set_color(int v, Color c) { colors_[check(v)] = c; }
  std::optional<int> label(int v) const { return labels_[check(v)]; }

  /// "# vertices: n", optional "# red: ..." and "# labels: ..." headers, then
  /// one "u v" pair per line.
  std::string to_text() const;
  static LabeledGraph parse(std::string_view text);

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int check(int v) const;

  std::vector<std::uint64_t> adj_;
  std::vector<Color> colors_;
  std::vector<std::optional<int>> labels_;
};

/// Vertex i carries labels[i]; uv is an edge (u = v allowed) iff the labels
/// sum to at least lambda.
LabeledGraph threshold_graph(const std::vector<int>& labels, int lambda);
/// Labels 1..q with threshold q. Vertex q-1 carries the top label.
LabeledGraph threshold_graph(int q);

LabeledGraph complete_bipartite(int left, int right);

/// Largest |V(G)| accepted by hom_count.
constexpr int kHomGuard = 12;

/// Number of graph homomorphisms G -> H. Throws std::length_error when G has
/// more than kHomGuard vertices.
BigInt hom_count(const LabeledGraph& g, const LabeledGraph& h);

/// Homomorphisms sending every red vertex of g to `target`. Only blue vertices
/// count towards the size guard.
BigInt admissible_hom_count(const LabeledGraph& g, const LabeledGraph& h, int target);

/// hom(K_{d,d}, H_q) by splitting on the minimum label of each side.
BigInt hom_kdd(int d, int q);

/// d|V| - 2|E|.
long discrepancy(const LabeledGraph& g, int d);
/// sum over vertices of d - deg(v).
long discrepancy_by_degrees(const LabeledGraph& g, int d);

/// 1 + max(3 + D/d, 2 ceil(d/2)) + |V(G)| with D the discrepancy of g.
Rational regularize_vertex_bound(const LabeledGraph& g, int d);

/// d-regular supergraph construction. Input vertices are coloured blue, added
/// gadget vertices red. Throws std::invalid_argument if g has loops or a
/// vertex of degree above d.
LabeledGraph regularize(const LabeledGraph& g, int d);

/// Graph on 1..h (vertex x stored at index x-1) with xy an edge, x != y,
/// whenever x + y is one of the positions.
LabeledGraph heavy_index_graph(int h, const std::vector<int>& positions);

/// All loop-free d-regular graphs on n vertices whose vertex 0 is adjacent to
/// exactly 1..d. Every labelled d-regular graph is isomorphic to one of them.
std::vector<LabeledGraph> regular_graphs(int n, int d);

}  // namespace kunzlab
