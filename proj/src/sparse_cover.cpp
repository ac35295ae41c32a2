#include "bclab/sparse_cover.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bclab/builders.hpp"

namespace bclab {

std::vector<std::array<int, 4>> list_induced_c4(const Graph& g) {
  const int n = g.order();
  std::vector<std::array<int, 4>> out;
  // a is the smallest vertex, c its diagonal partner, b < d the other two.
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) continue;
      const VertexSet common = g.neighbors(a) & g.neighbors(c);
      for (int b = common.next(a); b != -1; b = common.next(b))
        for (int d = common.next(b); d != -1; d = common.next(d))
          if (!g.adjacent(b, d)) {
            std::array<int, 4> q{a, b, c, d};
            std::sort(q.begin(), q.end());
            out.push_back(q);
          }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool nontrivial_bicliques_are_disjoint_c4s(const Graph& g) {
  const int n = g.order();
  std::vector<int> owner_cycle(static_cast<std::size_t>(n), -1);
  std::map<std::array<int, 4>, int> ids;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const VertexSet common = g.neighbors(x) & g.neighbors(y);
      if (common.count() < 2) continue;
      for (int b = common.first(); b != -1; b = common.next(b)) {
        for (int d = common.next(b); d != -1; d = common.next(d)) {
          // 4-cycle x-b-y-d as a subgraph; a chord makes a larger nontrivial biclique overlap.
          if (g.adjacent(x, y) || g.adjacent(b, d)) return false;
          std::array<int, 4> q{x, b, y, d};
          std::sort(q.begin(), q.end());
          const int id = ids.try_emplace(q, static_cast<int>(ids.size())).first->second;
          for (int v : q) {
            if (owner_cycle[v] != -1 && owner_cycle[v] != id) return false;
            owner_cycle[v] = id;
          }
        }
      }
    }
  }
  return true;
}

namespace {

struct Piece {
  VertexSet vertices;
  int weight;
};

class WeightedIndependentSet {
 public:
  WeightedIndependentSet(std::vector<int> weights, std::vector<VertexSet> adj, SearchBudget budget)
      : weights_(std::move(weights)), adj_(std::move(adj)), counter_(budget) {}

  struct Solution {
    int weight = 0;
    std::vector<int> chosen;
  };

  Solution solve() { return solve(VertexSet::full(static_cast<int>(adj_.size()))); }

 private:
  int weight_of(const VertexSet& s) const {
    int w = 0;
    s.for_each([&](int x) { w += weights_[x]; });
    return w;
  }

  VertexSet component_of(int start, const VertexSet& active) const {
    VertexSet comp(active.universe()), frontier(active.universe());
    comp.insert(start);
    frontier.insert(start);
    while (frontier.any()) {
      const int x = frontier.first();
      frontier.erase(x);
      const VertexSet fresh = (adj_[x] & active) - comp;
      comp |= fresh;
      frontier |= fresh;
    }
    return comp;
  }

  Solution solve(VertexSet active) {
    if (!counter_.tick()) throw BudgetExceeded("gamma_max: node budget exhausted", BlockCount(0), BlockCount(0));
    Solution sol;
    // Reductions: take x whenever it outweighs its whole remaining neighbourhood.
    bool changed = true;
    while (changed && active.any()) {
      changed = false;
      for (int x = active.first(); x != -1; x = active.next(x)) {
        const VertexSet nb = adj_[x] & active;
        if (weights_[x] >= weight_of(nb)) {
          sol.weight += weights_[x];
          sol.chosen.push_back(x);
          active -= nb;
          active.erase(x);
          changed = true;
        }
      }
    }
    if (active.empty()) return sol;

    const VertexSet comp = component_of(active.first(), active);
    if (comp != active) {
      for (VertexSet rest = active; rest.any();) {
        const VertexSet c = component_of(rest.first(), rest);
        rest -= c;
        append(sol, solve(c));
      }
      return sol;
    }

    int pivot = active.first();
    for (int x = active.first(); x != -1; x = active.next(x))
      if ((adj_[x] & active).count() > (adj_[pivot] & active).count()) pivot = x;

    Solution take = solve(active - adj_[pivot] - VertexSet(active.universe(), {pivot}));
    take.weight += weights_[pivot];
    take.chosen.push_back(pivot);
    VertexSet without = active;
    without.erase(pivot);
    Solution skip = solve(without);
    append(sol, take.weight >= skip.weight ? take : skip);
    return sol;
  }

  static void append(Solution& into, const Solution& from) {
    into.weight += from.weight;
    into.chosen.insert(into.chosen.end(), from.chosen.begin(), from.chosen.end());
  }

  std::vector<int> weights_;
  std::vector<VertexSet> adj_;
  detail::NodeCounter counter_;
};

}  // namespace

GammaResult gamma_max(const Graph& g, SearchBudget budget) {
  const int n = g.order();
  const auto cycles = list_induced_c4(g);
  std::vector<Piece> pieces;
  for (int v = 0; v < n; ++v) pieces.push_back({VertexSet(n, {v}), 1});
  for (const auto& q : cycles) pieces.push_back({VertexSet(n, {q[0], q[1], q[2], q[3]}), 3});

  const int count = static_cast<int>(pieces.size());
  std::vector<VertexSet> closed(pieces.size(), VertexSet(n));  // piece plus its neighbourhood
  for (int i = 0; i < count; ++i) {
    closed[i] = pieces[i].vertices;
    pieces[i].vertices.for_each([&](int v) { closed[i] |= g.neighbors(v); });
  }
  std::vector<VertexSet> conflict(pieces.size(), VertexSet(count));
  std::vector<int> weights;
  for (int i = 0; i < count; ++i) {
    weights.push_back(pieces[i].weight);
    for (int j = i + 1; j < count; ++j)
      if (closed[i].intersects(pieces[j].vertices)) {
        conflict[i].insert(j);
        conflict[j].insert(i);
      }
  }

  auto solution = WeightedIndependentSet(std::move(weights), std::move(conflict), budget).solve();
  std::sort(solution.chosen.begin(), solution.chosen.end());
  GammaResult result;
  result.cover.isolated = VertexSet(n);
  for (int id : solution.chosen) {
    if (id < n)
      result.cover.isolated.insert(id);
    else
      result.cover.cycles.push_back(cycles[id - n]);
  }
  result.cover.gamma = solution.weight;
  result.gamma = solution.weight;
  return result;
}

bool is_valid_sparse_cover(const Graph& g, const SparseCover& cover) {
  const int n = g.order();
  if (cover.isolated.universe() != n) return false;
  std::vector<VertexSet> pieces;
  cover.isolated.for_each([&](int v) { pieces.push_back(VertexSet(n, {v})); });
  for (const auto& q : cover.cycles) {
    for (int v : q)
      if (v < 0 || v >= n) return false;
    VertexSet s(n, {q[0], q[1], q[2], q[3]});
    if (s.count() != 4) return false;
    // Induced C4: four edges, every vertex of degree 2 inside the set.
    for (int v : q)
      if ((g.neighbors(v) & s).count() != 2) return false;
    pieces.push_back(std::move(s));
  }
  VertexSet used(n);
  for (const auto& p : pieces) {
    if (p.intersects(used)) return false;
    used |= p;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    VertexSet reach(n);
    pieces[i].for_each([&](int v) { reach |= g.neighbors(v); });
    if ((reach & (used - pieces[i])).any()) return false;
  }
  return cover.gamma == cover.isolated.count() + 3 * static_cast<int>(cover.cycles.size());
}

Decomposition sparse_cover_decomposition(const Graph& g, const SparseCover& cover) {
  if (!is_valid_sparse_cover(g, cover)) throw std::invalid_argument("sparse_cover_decomposition: invalid cover");
  const int n = g.order();
  VertexSet kept = cover.isolated;
  for (const auto& q : cover.cycles)
    for (int v : q) kept.insert(v);
  Decomposition d = star_sweep(g, kept);
  for (const auto& q : cover.cycles) {
    const int a = q[0];
    int partner = -1;
    for (int v : {q[1], q[2], q[3]})
      if (!g.adjacent(a, v)) partner = v;
    BipartiteBlock blk{VertexSet(n, {a, partner}), VertexSet(n)};
    for (int v : {q[1], q[2], q[3]})
      if (v != partner) blk.b.insert(v);
    d.blocks.push_back(std::move(blk));
  }
  return d;
}

}  // namespace bclab
