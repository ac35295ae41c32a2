#include "bclab/graph.hpp"

#include <stdexcept>
#include <string>

namespace bclab {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {
  std::int64_t degree_sum = 0;
  for (const auto& r : rows_) degree_sum += r.count();
  edge_count_ = degree_sum / 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
    if (rows[e.u].contains(e.v))
      throw std::invalid_argument("Graph: duplicate edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    rows[e.u].insert(e.v);
    rows[e.v].insert(e.u);
  }
  return Graph(std::move(rows));
}

Graph Graph::complete(int n) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet::full(n));
  for (int v = 0; v < n; ++v) rows[v].erase(v);
  return Graph(std::move(rows));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u)
    for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) out.push_back({u, v});
  return out;
}

Graph Graph::complement() const {
  std::vector<VertexSet> rows;
  rows.reserve(rows_.size());
  for (int v = 0; v < order(); ++v) {
    auto r = rows_[v].complement();
    r.erase(v);
    rows.push_back(std::move(r));
  }
  return Graph(std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> members = s.members();
  for (int v : members)
    if (v >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
  const int k = static_cast<int>(members.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(members[i], members[j])) edges.push_back({i, j});
  return {Graph::from_edges(k, edges), std::move(members)};
}

bool is_independent_set(const Graph& g, const VertexSet& set) {
  const VertexSet s = set.with_universe(g.order());
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_induced_complete_bipartite(const Graph& g, const VertexSet& set_a, const VertexSet& set_b) {
  const VertexSet a = set_a.with_universe(g.order());
  const VertexSet b = set_b.with_universe(g.order());
  if (a.empty() || b.empty() || a.intersects(b)) return false;
  if (!is_independent_set(g, a) || !is_independent_set(g, b)) return false;
  bool complete = true;
  a.for_each([&](int v) {
    if (complete && !b.is_subset_of(g.neighbors(v))) complete = false;
  });
  return complete;
}

}  // namespace bclab
