#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hball/complex.hpp"

namespace hball {

/// Simple undirected graph on vertices 0..n-1, at most 32 vertices.
struct Graph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  explicit Graph(int vertices = 0) : n(vertices), adj(vertices, 0) {}
  static Graph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const;
  int max_degree() const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph& a, const Graph& b) {
    if (a.n != b.n) return a.n <=> b.n;
    return a.adj <=> b.adj;
  }
};

/// Relabelling that depends only on the isomorphism class. Each connected component is
/// labelled by individualization-refinement; components are then concatenated in code order.
Graph canonical_form(const Graph& g);

/// All graphs with exactly m edges and no isolated vertices, one per isomorphism class,
/// restricted to at most max_vertices vertices. Results are cached.
const std::vector<Graph>& graphs_with_edges(int m, int max_vertices);

/// Vertex triples of K_n (with g embedded on the first g.n vertices) spanning at least one edge of g.
Count triples_touching(const Graph& g, int n);
/// Triangles of the complement of g inside K_n.
Count complement_triangles(const Graph& g, int n);

}  // namespace hball
