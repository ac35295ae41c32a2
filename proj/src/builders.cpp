#include "bclab/builders.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace bclab {

Decomposition star_sweep(const Graph& g, const VertexSet& keep_in) {
  const int n = g.order();
  const VertexSet keep = keep_in.with_universe(n);
  Decomposition d;
  VertexSet swept(n);
  for (int v = 0; v < n; ++v) {
    if (keep.contains(v)) continue;
    VertexSet leaves = g.neighbors(v) - swept;
    swept.insert(v);
    if (leaves.empty()) continue;
    d.blocks.push_back({VertexSet(n, {v}), std::move(leaves)});
  }
  return d;
}

Decomposition star_decomposition(const Graph& g, const VertexSet& ind) {
  if (!is_independent_set(g, ind)) throw std::invalid_argument("star_decomposition: set is not independent");
  return star_sweep(g, ind);
}

Decomposition beta_decomposition(const Graph& g, const BipartiteBlock& h) {
  if (!is_induced_complete_bipartite(g, h.a, h.b))
    throw std::invalid_argument("beta_decomposition: block is not an induced complete bipartite subgraph");
  const int n = g.order();
  BipartiteBlock block{h.a.with_universe(n), h.b.with_universe(n)};
  Decomposition d = star_sweep(g, block.a | block.b);
  d.blocks.push_back(std::move(block));
  return d;
}

namespace {

void split_into(const BipartiteBlock& blk, std::int64_t max_edges, std::vector<BipartiteBlock>& out) {
  if (blk.edge_count() <= max_edges) {
    out.push_back(blk);
    return;
  }
  const bool split_a = blk.a.count() >= blk.b.count();
  const VertexSet& cls = split_a ? blk.a : blk.b;
  const int size = cls.count();
  if (size < 4)
    throw std::domain_error("split_block: a K_{" + std::to_string(blk.a.count()) + "," +
                            std::to_string(blk.b.count()) + "} exceeds " + std::to_string(max_edges) +
                            " edges and cannot be halved into nontrivial pieces");
  VertexSet first(cls.universe()), second(cls.universe());
  int taken = 0;
  cls.for_each([&](int v) { (taken++ < (size + 1) / 2 ? first : second).insert(v); });
  if (split_a) {
    split_into({first, blk.b}, max_edges, out);
    split_into({second, blk.b}, max_edges, out);
  } else {
    split_into({blk.a, first}, max_edges, out);
    split_into({blk.a, second}, max_edges, out);
  }
}

ValidationReport fail(Violation v, int block, Edge e, std::string message) {
  return {false, v, block, e, std::move(message)};
}

}  // namespace

std::vector<BipartiteBlock> split_block(const BipartiteBlock& blk, std::int64_t max_edges) {
  if (!blk.is_nontrivial() || blk.a.intersects(blk.b))
    throw std::invalid_argument("split_block: block must be nontrivial with disjoint classes");
  std::vector<BipartiteBlock> out;
  split_into(blk, max_edges, out);
  return out;
}

ValidationReport validate_decomposition(const Graph& g, const Decomposition& d) {
  const int n = g.order();
  std::vector<VertexSet> covered(static_cast<std::size_t>(n), VertexSet(n));
  for (int i = 0; i < d.size(); ++i) {
    const auto& blk = d.blocks[i];
    const std::string tag = "block " + std::to_string(i) + ": ";
    if (blk.a.universe() != n || blk.b.universe() != n)
      return fail(Violation::kUniverseMismatch, i, {}, tag + "vertex universe differs from the graph");
    if (blk.a.empty() || blk.b.empty()) return fail(Violation::kEmptyClass, i, {}, tag + "empty class");
    if (blk.a.intersects(blk.b)) return fail(Violation::kOverlappingClasses, i, {}, tag + "classes intersect");
    if (d.kind == DecompositionKind::kNontrivialOnly && !blk.is_nontrivial())
      return fail(Violation::kTrivialBlock, i, {}, tag + "star in a nontrivial-only decomposition");
    std::optional<ValidationReport> bad;
    blk.a.for_each([&](int x) {
      if (bad) return;
      blk.b.for_each([&](int y) {
        if (bad) return;
        const Edge e{std::min(x, y), std::max(x, y)};
        auto pair = [&] { return std::to_string(e.u) + "-" + std::to_string(e.v); };
        if (!g.adjacent(x, y))
          bad = fail(Violation::kMissingEdge, i, e, tag + "pair " + pair() + " is not an edge");
        else if (covered[x].contains(y))
          bad = fail(Violation::kOverlap, i, e, tag + "edge " + pair() + " already covered");
        else {
          covered[x].insert(y);
          covered[y].insert(x);
        }
      });
    });
    if (bad) return *bad;
  }
  for (int u = 0; u < n; ++u) {
    const VertexSet missing = g.neighbors(u) - covered[u];
    if (missing.any()) {
      const int v = missing.first();
      const Edge e{std::min(u, v), std::max(u, v)};
      return fail(Violation::kUncoveredEdge, -1, e,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " uncovered");
    }
  }
  return {};
}

}  // namespace bclab
