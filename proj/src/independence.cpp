#include "bclab/independence.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace bclab {
namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, SearchBudget budget) : counter_(budget) {
    const int n = g.order();
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[order_[i]] = i;
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < n; ++i)
      g.neighbors(order_[i]).for_each([&](int w) { adj_[i].insert(position[w]); });
    if (n > 0) best_ = {0};
  }

  VertexSetResult run() {
    const int n = static_cast<int>(adj_.size());
    VertexSet witness(n);
    if (n == 0) return {0, witness};
    std::vector<int> clique;
    expand(clique, VertexSet::full(n));
    for (int v : best_) witness.insert(order_[v]);
    return {static_cast<int>(best_.size()), witness};
  }

 private:
  void expand(std::vector<int>& clique, VertexSet candidates) {
    if (!counter_.tick())
      throw BudgetExceeded("max_clique: node budget exhausted", BlockCount(static_cast<int>(best_.size())),
                           BlockCount(static_cast<int>(adj_.size())));
    // Greedy sequential colouring; vertices come out grouped by ascending colour.
    std::vector<std::pair<int, int>> colored;
    colored.reserve(static_cast<std::size_t>(candidates.count()));
    VertexSet uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      VertexSet q = uncolored;
      while (q.any()) {
        const int v = q.first();
        q.erase(v);
        uncolored.erase(v);
        q -= adj_[v];
        colored.emplace_back(v, color);
      }
    }
    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      const auto [v, c] = *it;
      if (static_cast<int>(clique.size()) + c <= static_cast<int>(best_.size())) return;
      clique.push_back(v);
      VertexSet next = candidates & adj_[v];
      if (next.empty()) {
        if (clique.size() > best_.size()) best_ = clique;
      } else {
        expand(clique, std::move(next));
      }
      clique.pop_back();
      candidates.erase(v);
    }
  }

  detail::NodeCounter counter_;
  std::vector<int> order_;
  std::vector<VertexSet> adj_;
  std::vector<int> best_;
};

// Both classes independent, every cross pair adjacent. The smallest vertex of a ∪ b is in a.
class BicliqueSearch {
 public:
  BicliqueSearch(const Graph& g, SearchBudget budget) : g_(g), counter_(budget) {}

  InducedBicliqueResult run() {
    const int n = g_.order();
    if (g_.edge_count() == 0) return {0, std::nullopt};
    for (int v = 0; v < n; ++v) {
      VertexSet higher(n);
      for (int w = v + 1; w < n; ++w) higher.insert(w);
      VertexSet cand_b = g_.neighbors(v) & higher;
      if (cand_b.empty()) continue;
      VertexSet cand_a = higher - g_.neighbors(v);
      VertexSet a(n), b(n);
      a.insert(v);
      search(a, b, std::move(cand_a), std::move(cand_b));
    }
    return {best_size_, best_};
  }

 private:
  // Greedy partition of s into cliques of g; an independent subset meets each clique once.
  int clique_cover(VertexSet s) const {
    int cliques = 0;
    while (s.any()) {
      const int v = s.first();
      s.erase(v);
      VertexSet q = s & g_.neighbors(v);
      while (q.any()) {
        const int w = q.first();
        s.erase(w);
        q.erase(w);
        q &= g_.neighbors(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(VertexSet& a, VertexSet& b, VertexSet cand_a, VertexSet cand_b) {
    if (!counter_.tick())
      throw BudgetExceeded("beta: node budget exhausted", BlockCount(best_size_), BlockCount(g_.order()));
    const int size = a.count() + b.count();
    if (b.any() && size > best_size_) {
      best_size_ = size;
      best_ = BipartiteBlock{a, b};
    }
    if (cand_b.empty() && (b.empty() || cand_a.empty())) return;
    if (size + clique_cover(cand_a) + clique_cover(cand_b) <= best_size_) return;

    const bool from_b = b.empty() || cand_a.empty() || cand_b.count() > cand_a.count();
    const int x = from_b ? cand_b.first() : cand_a.first();
    const VertexSet& nx = g_.neighbors(x);
    if (from_b) {
      b.insert(x);
      search(a, b, cand_a & nx, cand_b - nx - VertexSet(g_.order(), {x}));
      b.erase(x);
      cand_b.erase(x);
    } else {
      a.insert(x);
      search(a, b, cand_a - nx - VertexSet(g_.order(), {x}), cand_b & nx);
      a.erase(x);
      cand_a.erase(x);
    }
    search(a, b, std::move(cand_a), std::move(cand_b));
  }

  const Graph& g_;
  detail::NodeCounter counter_;
  int best_size_ = 0;
  std::optional<BipartiteBlock> best_;
};

}  // namespace

VertexSetResult max_clique(const Graph& g, SearchBudget budget) { return CliqueSearch(g, budget).run(); }

VertexSetResult alpha(const Graph& g, SearchBudget budget) { return max_clique(g.complement(), budget); }

InducedBicliqueResult beta(const Graph& g, SearchBudget budget) { return BicliqueSearch(g, budget).run(); }

}  // namespace bclab
