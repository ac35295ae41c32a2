#pragma once

#include <optional>

#include "bclab/decomposition.hpp"
#include "bclab/graph.hpp"
#include "bclab/search.hpp"

namespace bclab {

struct VertexSetResult {
  int size = 0;
  VertexSet witness;
};

/// Maximum clique by bitset branch and bound with a greedy colouring bound (MCQ order).
VertexSetResult max_clique(const Graph& g, SearchBudget budget = {});

/// Independence number with a maximum independent set; clique search on the complement.
VertexSetResult alpha(const Graph& g, SearchBudget budget = {});

struct InducedBicliqueResult {
  int size = 0;
  std::optional<BipartiteBlock> witness;
};

/// Largest |a|+|b| over induced complete bipartite subgraphs with both classes nonempty.
/// Zero, without witness, for an edgeless graph.
InducedBicliqueResult beta(const Graph& g, SearchBudget budget = {});

}  // namespace bclab
