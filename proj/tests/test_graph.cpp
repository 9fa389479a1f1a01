#include <doctest.h>

#include <random>

#include "kunzlab/graph.hpp"
#include "oracles.hpp"

using namespace kunzlab;

namespace {

oracle::Graph plain(const LabeledGraph& g) {
  oracle::Graph o;
  o.n = g.vertex_count();
  o.edges = g.edges();
  return o;
}

LabeledGraph cycle(int n) {
  LabeledGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  LabeledGraph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK(g.add_edge(2, 2));
  CHECK(g.degree(2) == 2);
  CHECK(g.has_loops());
  CHECK(g.edge_count() == 2);
  CHECK(g.remove_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_THROWS(g.degree(3));
  g.set_color(1, Color::red);
  CHECK(LabeledGraph::parse(g.to_text()) == g);
}

TEST_CASE("threshold graphs") {
  const LabeledGraph h = threshold_graph(4);
  CHECK(h.vertex_count() == 4);
  // x ~ y iff x + y >= 4, loops included
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y) CHECK(h.has_edge(x - 1, y - 1) == (x + y >= 4));
  CHECK(h.label(3) == 4);
  const LabeledGraph custom = threshold_graph({1, 5, 2}, 6);
  CHECK(custom.has_edge(1, 1));
  CHECK(custom.has_edge(0, 1));
  CHECK_FALSE(custom.has_edge(0, 2));
}

TEST_CASE("homomorphism counts against brute force") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    for (int q = 1; q <= 4; ++q) CHECK(hom_count(g, threshold_graph(q)) == oracle::hom_threshold(plain(g), q));
  }
  for (int d = 1; d <= 3; ++d)
    for (int q = 1; q <= 4; ++q) CHECK(hom_kdd(d, q) == oracle::hom_threshold(plain(complete_bipartite(d, d)), q));
  CHECK_THROWS_AS(hom_count(LabeledGraph(13), threshold_graph(2)), std::length_error);
  CHECK(hom_count(LabeledGraph(0), threshold_graph(3)) == 1);
}

TEST_CASE("admissible homomorphisms pin red vertices") {
  LabeledGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.set_color(2, Color::red);
  const LabeledGraph h = threshold_graph(3);
  // vertex 2 forced to 3; then vertex 1 is free (1 + 3 >= 3), vertex 0 pairs with 1
  long want = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) want += (a + b >= 3);
  CHECK(admissible_hom_count(g, h, 2) == want);
}

TEST_CASE("regularization") {
  LabeledGraph edge(2);
  edge.add_edge(0, 1);
  for (int d = 1; d <= 5; ++d) {
    const LabeledGraph r = regularize(edge, d);
    for (int v = 0; v < r.vertex_count(); ++v) CHECK(r.degree(v) == d);
    CHECK_FALSE(r.has_loops());
    CHECK(Rational(r.vertex_count()) <= regularize_vertex_bound(edge, d));
    CHECK(r.color(0) == Color::blue);
  }
  // already regular with even |V| and even d: unchanged
  CHECK(regularize(cycle(6), 2) == cycle(6));
  CHECK(discrepancy(cycle(5), 3) == 5);
  CHECK(discrepancy_by_degrees(cycle(5), 3) == 5);
  LabeledGraph looped(1);
  looped.add_edge(0, 0);
  CHECK_THROWS(regularize(looped, 2));
  CHECK_THROWS(regularize(cycle(4), 1));
}

TEST_CASE("regular graph catalogue") {
  CHECK(regular_graphs(4, 2).size() == 1);
  CHECK(regular_graphs(3, 2).size() == 1);
  CHECK(regular_graphs(5, 3).empty());
  for (const auto& g : regular_graphs(6, 3)) {
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 3);
    CHECK(g.neighbours(0) == 0b1110);
  }
  CHECK_FALSE(regular_graphs(6, 3).empty());
}

TEST_CASE("heavy index graph") {
  const LabeledGraph g = heavy_index_graph(4, {5});
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.label(0) == 1);
}
