#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bclab/vertex_set.hpp"

namespace bclab {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..order()-1 with bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph complete(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  std::int64_t edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// All edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  explicit Graph(std::vector<VertexSet> rows);

  std::vector<VertexSet> rows_;
  std::int64_t edge_count_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  /// to_original[i] is the vertex of the host graph relabeled to i.
  std::vector<int> to_original;
};

/// Subgraph induced on s, relabeled 0..|s|-1 in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);

/// a, b disjoint and nonempty, a x b all edges, no edges inside a or inside b.
bool is_induced_complete_bipartite(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace bclab
