#pragma once

#include <optional>

#include "bclab/decomposition.hpp"
#include "bclab/graph.hpp"
#include "bclab/search.hpp"

namespace bclab {

/// Largest graph the exact partition search accepts.
inline constexpr int kMaxPartitionOrder = 64;

struct TauResult {
  int tau = 0;
  Decomposition certificate;
};

/// Minimum number of edge-disjoint complete bipartite subgraphs partitioning E(g), with a
/// certificate. Throws BudgetExceeded (carrying bounds) when the node limit is hit and
/// std::invalid_argument when g has more than kMaxPartitionOrder vertices.
TauResult exact_tau(const Graph& g, SearchBudget budget = {});

struct TauPrimeResult {
  BlockCount tau_prime;
  /// Present iff tau_prime is finite.
  std::optional<Decomposition> certificate;
};

/// As exact_tau with every block nontrivial (both classes of size >= 2); infinite when no
/// such partition exists.
TauPrimeResult exact_tau_prime(const Graph& g, SearchBudget budget = {});

struct SubsetMinimum {
  int value = 0;
  VertexSet best_u;
};

/// min over U of |V| - |U| + tau'(G[U]) by enumeration of all subsets U; equals tau(g).
/// The budget is shared by all tau' searches. Requires order() <= 24.
SubsetMinimum lemma34_min(const Graph& g, SearchBudget budget = {});

/// True iff some edge of g lies in a nontrivial complete bipartite subgraph of g for every
/// edge, i.e. returns false when an edge cannot be covered by any nontrivial block.
bool every_edge_in_nontrivial_biclique(const Graph& g);

}  // namespace bclab
