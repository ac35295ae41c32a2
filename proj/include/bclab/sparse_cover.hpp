#pragma once

#include <array>
#include <vector>

#include "bclab/decomposition.hpp"
#include "bclab/graph.hpp"
#include "bclab/search.hpp"

namespace bclab {

/// All 4-subsets inducing exactly a 4-cycle, each sorted, in ascending lexicographic order.
std::vector<std::array<int, 4>> list_induced_c4(const Graph& g);

struct GammaResult {
  int gamma = 0;
  SparseCover cover;
};

/// Maximum of gamma(H) = |V(H)| - #C4(H) over induced subgraphs H whose components are single
/// vertices or 4-cycles. Pieces (vertices weight 1, induced C4s weight 3) conflict when they
/// share a vertex or are joined by an edge; the answer is a maximum-weight independent set of
/// the conflict graph, solved exactly per connected component.
GammaResult gamma_max(const Graph& g, SearchBudget budget = {});

/// Every nontrivial complete bipartite subgraph of g is an induced C4 and these C4s are
/// pairwise vertex-disjoint. Equivalently: every 4-cycle subgraph is induced and no two
/// share a vertex.
bool nontrivial_bicliques_are_disjoint_c4s(const Graph& g);

/// Checks the SparseCover invariants against g.
bool is_valid_sparse_cover(const Graph& g, const SparseCover& cover);

/// Stars at the vertices outside the cover plus one K_{2,2} per cycle: n - gamma blocks.
Decomposition sparse_cover_decomposition(const Graph& g, const SparseCover& cover);

}  // namespace bclab
