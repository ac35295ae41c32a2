#include "bclab/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bclab/builders.hpp"
#include "bclab/independence.hpp"

namespace bclab {
namespace {

using Mask = std::uint64_t;
using Rows = std::vector<Mask>;

constexpr int kInf = BlockCount::infinite().value();

constexpr Mask bit(int v) { return Mask{1} << v; }
int popcount(Mask m) { return std::popcount(m); }

struct RowsHash {
  std::size_t operator()(const Rows& rows) const {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (Mask m : rows) {
      h ^= m + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

struct Choice {
  Mask a;
  Mask b;
};

struct MemoEntry {
  int value;
  bool exact;
  Choice first;
};

struct OutOfBudget {};

Rows to_rows(const Graph& g) {
  Rows rows(static_cast<std::size_t>(g.order()), 0);
  for (int v = 0; v < g.order(); ++v) g.neighbors(v).for_each([&](int w) { rows[v] |= bit(w); });
  return rows;
}

// Exact search over the residual (still uncovered) edge set. solve(R, cap) returns tau(R)
// when that is < cap and otherwise a lower bound that is >= cap. Blocks always contain one
// fixed residual edge uv (u of least residual degree, v its neighbour of least degree);
// interchangeable twin vertices are assigned in non-decreasing order so isomorphic residuals
// are explored once.
class PartitionSearch {
 public:
  PartitionSearch(int n, bool nontrivial, detail::NodeCounter& counter)
      : n_(n), nontrivial_(nontrivial), counter_(counter) {}

  int solve(Rows& r, int cap) {
    int u = -1;
    for (int x = 0; x < n_; ++x)
      if (r[x] != 0 && (u < 0 || popcount(r[x]) < popcount(r[u]))) u = x;
    if (u < 0) return 0;
    if (!counter_.tick()) throw OutOfBudget{};

    int lb = 0;
    if (auto it = memo_.find(r); it != memo_.end()) {
      if (it->second.exact || it->second.value >= cap) return it->second.value;
      lb = it->second.value;
    }
    lb = std::max(lb, lower_bound(r));
    if (lb >= cap) {
      remember(r, lb, false, {});
      return lb;
    }

    int v = -1;
    for (Mask m = r[u]; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (v < 0 || popcount(r[w]) < popcount(r[v])) v = w;
    }
    std::vector<Choice> choices = enumerate(r, u, v);
    if (choices.empty()) {
      remember(r, kInf, true, {});
      return kInf;
    }

    int result = kInf;
    Choice best{};
    for (const Choice& c : choices) {
      const int limit = std::min(result, cap);
      if (limit <= lb) break;
      remove_block(r, c);
      const int sub = solve(r, limit - 1);
      restore_block(r, c);
      const int value = sub >= kInf ? kInf : sub + 1;
      if (value < result) {
        result = value;
        best = c;
      }
    }
    if (result < cap) {
      remember(r, result, true, best);
      return result;
    }
    result = std::max(result, lb);
    remember(r, result, result >= kInf, {});
    return result;
  }

  int root_lower_bound(const Rows& r) const {
    int lb = lower_bound(r);
    if (auto it = memo_.find(r); it != memo_.end()) lb = std::max(lb, it->second.value);
    return lb;
  }

  /// Follows memoised optimal first blocks from r down to the empty residual.
  Decomposition certificate(Rows r) const {
    Decomposition d{nontrivial_ ? DecompositionKind::kNontrivialOnly : DecompositionKind::kAny, {}};
    while (std::any_of(r.begin(), r.end(), [](Mask m) { return m != 0; })) {
      const auto& entry = memo_.at(r);
      BipartiteBlock blk{VertexSet(n_), VertexSet(n_)};
      for (int x = 0; x < n_; ++x) {
        if (entry.first.a & bit(x)) blk.a.insert(x);
        if (entry.first.b & bit(x)) blk.b.insert(x);
      }
      d.blocks.push_back(std::move(blk));
      remove_block(r, entry.first);
    }
    return d;
  }

 private:
  void remember(const Rows& r, int value, bool exact, Choice first) {
    auto [it, inserted] = memo_.try_emplace(r, MemoEntry{value, exact, first});
    if (!inserted && !it->second.exact) it->second = MemoEntry{std::max(value, it->second.value), exact, first};
    if (!inserted && exact) it->second = MemoEntry{value, true, first};
  }

  static void remove_block(Rows& r, const Choice& c) {
    for (Mask a = c.a; a; a &= a - 1) r[std::countr_zero(a)] &= ~c.b;
    for (Mask b = c.b; b; b &= b - 1) r[std::countr_zero(b)] &= ~c.a;
  }
  static void restore_block(Rows& r, const Choice& c) {
    for (Mask a = c.a; a; a &= a - 1) r[std::countr_zero(a)] |= c.b;
    for (Mask b = c.b; b; b &= b - 1) r[std::countr_zero(b)] |= c.a;
  }

  // Largest a*b such that a vertices of degree >= b and a+b vertices of degree >= a exist,
  // an upper bound on the edges of any complete bipartite subgraph of a component.
  int max_block_edges(const std::vector<int>& degrees) const {
    const int max_deg = *std::max_element(degrees.begin(), degrees.end());
    std::vector<int> at_least(static_cast<std::size_t>(max_deg) + 2, 0);
    for (int d : degrees) ++at_least[d];
    for (int t = max_deg - 1; t >= 0; --t) at_least[t] += at_least[t + 1];
    int best = 0;
    for (int a = nontrivial_ ? 2 : 1; a <= max_deg; ++a)
      for (int b = a; b <= max_deg; ++b)
        if (at_least[b] >= a && at_least[a] >= a + b) best = std::max(best, a * b);
    return best;
  }

  // Sum over components of ceil(edges / largest possible block).
  int lower_bound(const Rows& r) const {
    Mask seen = 0;
    int total = 0;
    for (int s = 0; s < n_; ++s) {
      if (r[s] == 0 || (seen & bit(s))) continue;
      Mask comp = bit(s), frontier = bit(s);
      while (frontier) {
        const int x = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Mask fresh = r[x] & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      seen |= comp;
      std::vector<int> degrees;
      int degree_sum = 0;
      for (Mask c = comp; c; c &= c - 1) {
        degrees.push_back(popcount(r[std::countr_zero(c)]));
        degree_sum += degrees.back();
      }
      const int cap = max_block_edges(degrees);
      if (cap == 0) return kInf;
      const int edges = degree_sum / 2;
      total += (edges + cap - 1) / cap;
    }
    return total;
  }

  std::vector<Choice> enumerate(const Rows& r, int u, int v) const {
    const Mask pool = (r[u] | r[v]) & ~bit(u) & ~bit(v);
    std::vector<int> cand;
    for (Mask m = pool; m; m &= m - 1) cand.push_back(std::countr_zero(m));
    // twin_prev[i]: previous candidate with N(x) - y == N(y) - x, or -1.
    std::vector<int> twin_prev(cand.size(), -1);
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (std::size_t j = i; j-- > 0;) {
        const int x = cand[i], y = cand[j];
        if ((r[x] & ~bit(y)) == (r[y] & ~bit(x))) {
          twin_prev[i] = static_cast<int>(j);
          break;
        }
      }
    std::vector<Choice> out;
    std::vector<int> code(cand.size(), 0);
    extend(cand, twin_prev, code, 0, bit(u), bit(v), r[v] & ~bit(u), r[u] & ~bit(v), r, out);
    std::stable_sort(out.begin(), out.end(), [](const Choice& x, const Choice& y) {
      return popcount(x.a) * popcount(x.b) > popcount(y.a) * popcount(y.b);
    });
    return out;
  }

  // Codes: 0 = outside the block, 1 = class a (with u), 2 = class b (with v).
  void extend(const std::vector<int>& cand, const std::vector<int>& twin_prev, std::vector<int>& code,
              std::size_t i, Mask a, Mask b, Mask cand_a, Mask cand_b, const Rows& r,
              std::vector<Choice>& out) const {
    if (i == cand.size()) {
      if (!nontrivial_ || (popcount(a) >= 2 && popcount(b) >= 2)) out.push_back({a, b});
      return;
    }
    const int x = cand[i];
    const int floor_code = twin_prev[i] >= 0 ? code[twin_prev[i]] : 0;
    if (floor_code <= 0) {
      code[i] = 0;
      extend(cand, twin_prev, code, i + 1, a, b, cand_a, cand_b, r, out);
    }
    if (floor_code <= 1 && (cand_a & bit(x))) {
      code[i] = 1;
      extend(cand, twin_prev, code, i + 1, a | bit(x), b, cand_a, cand_b & r[x], r, out);
    }
    if (cand_b & bit(x)) {
      code[i] = 2;
      extend(cand, twin_prev, code, i + 1, a, b | bit(x), cand_a & r[x], cand_b, r, out);
    }
  }

  int n_;
  bool nontrivial_;
  detail::NodeCounter& counter_;
  std::unordered_map<Rows, MemoEntry, RowsHash> memo_;
};

void check_order(const Graph& g, const char* who) {
  if (g.order() > kMaxPartitionOrder)
    throw std::invalid_argument(std::string(who) + ": exact search supports at most " +
                                std::to_string(kMaxPartitionOrder) + " vertices");
}

}  // namespace

TauResult exact_tau(const Graph& g, SearchBudget budget) {
  check_order(g, "exact_tau");
  if (g.edge_count() == 0) return {0, {}};

  detail::NodeCounter counter(budget);
  Decomposition upper;
  try {
    upper = star_decomposition(g, alpha(g, budget).witness);
    if (auto b = beta(g, budget); b.witness) {
      Decomposition via_beta = beta_decomposition(g, *b.witness);
      if (via_beta.size() < upper.size()) upper = std::move(via_beta);
    }
  } catch (const BudgetExceeded&) {
    throw BudgetExceeded("exact_tau: node budget exhausted computing initial bounds", BlockCount(1),
                         BlockCount(g.order() - 1));
  }

  PartitionSearch search(g.order(), false, counter);
  Rows r = to_rows(g);
  int value = 0;
  try {
    value = search.solve(r, upper.size());
  } catch (const OutOfBudget&) {
    throw BudgetExceeded("exact_tau: node budget exhausted", BlockCount(search.root_lower_bound(r)),
                         BlockCount(upper.size()));
  }
  if (value >= upper.size()) return {upper.size(), std::move(upper)};
  return {value, search.certificate(std::move(r))};
}

TauPrimeResult exact_tau_prime(const Graph& g, SearchBudget budget) {
  check_order(g, "exact_tau_prime");
  if (g.edge_count() == 0) return {BlockCount(0), Decomposition{DecompositionKind::kNontrivialOnly, {}}};
  detail::NodeCounter counter(budget);
  PartitionSearch search(g.order(), true, counter);
  Rows r = to_rows(g);
  int value = 0;
  try {
    value = search.solve(r, kInf);
  } catch (const OutOfBudget&) {
    throw BudgetExceeded("exact_tau_prime: node budget exhausted", BlockCount(search.root_lower_bound(r)),
                         BlockCount::infinite());
  }
  if (value >= kInf) return {BlockCount::infinite(), std::nullopt};
  return {BlockCount(value), search.certificate(std::move(r))};
}

SubsetMinimum lemma34_min(const Graph& g, SearchBudget budget) {
  const int n = g.order();
  if (n > 24) throw std::invalid_argument("lemma34_min: subset enumeration supports at most 24 vertices");
  detail::NodeCounter counter(budget);
  const Rows full = to_rows(g);

  std::vector<Mask> subsets(std::size_t{1} << n);
  for (Mask s = 0; s < subsets.size(); ++s) subsets[s] = s;
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](Mask x, Mask y) { return popcount(x) > popcount(y); });

  int best = n;  // U = {} gives n - 0 + tau'(empty graph) = n.
  Mask best_u = 0;
  for (Mask u_set : subsets) {
    const int outside = n - popcount(u_set);
    if (outside >= best) continue;
    // Residual rows of G[U], kept in the original labelling.
    Rows r(static_cast<std::size_t>(n), 0);
    for (Mask m = u_set; m; m &= m - 1) {
      const int x = std::countr_zero(m);
      r[x] = full[x] & u_set;
    }
    PartitionSearch search(n, true, counter);
    int tau_prime = 0;
    try {
      tau_prime = search.solve(r, best - outside);
    } catch (const OutOfBudget&) {
      throw BudgetExceeded("lemma34_min: node budget exhausted", BlockCount(1), BlockCount(best));
    }
    if (tau_prime < best - outside) {
      best = outside + tau_prime;
      best_u = u_set;
    }
  }
  VertexSet u(n);
  for (int x = 0; x < n; ++x)
    if (best_u & bit(x)) u.insert(x);
  return {best, u};
}

bool every_edge_in_nontrivial_biclique(const Graph& g) {
  for (const auto& e : g.edges()) {
    // uv lies in a nontrivial block iff it lies in a K_{2,2}: x ~ v, y ~ u, x ~ y.
    VertexSet xs = g.neighbors(e.v);
    xs.erase(e.u);
    VertexSet ys = g.neighbors(e.u);
    ys.erase(e.v);
    bool found = false;
    xs.for_each([&](int x) {
      if (!found && (g.neighbors(x) & ys).any()) found = true;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace bclab
