#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bclab/decomposition.hpp"
#include "bclab/graph.hpp"

namespace bclab {

/// Stars centred at the vertices outside `keep`, swept in ascending order. The star at v takes
/// every edge from v to a vertex not yet swept, which includes all of v's edges into `keep`.
/// Empty stars are dropped. Covers E(g) exactly once iff `keep` is independent.
Decomposition star_sweep(const Graph& g, const VertexSet& keep);

/// At most n - |ind| stars; throws std::invalid_argument if ind is not independent.
Decomposition star_decomposition(const Graph& g, const VertexSet& ind);

/// Stars outside h plus h itself: at most n - |h| + 1 blocks. Throws std::invalid_argument if
/// h is not an induced complete bipartite subgraph of g.
Decomposition beta_decomposition(const Graph& g, const BipartiteBlock& h);

/// Splits blocks with more than max_edges edges by halving the larger class (class a on ties,
/// first half gets the extra vertex) until every piece fits. Only classes of size >= 4 are
/// split, so pieces stay nontrivial. Throws std::invalid_argument if blk is not nontrivial,
/// and std::domain_error when an oversized piece has no class of size >= 4.
std::vector<BipartiteBlock> split_block(const BipartiteBlock& blk, std::int64_t max_edges);

enum class Violation {
  kNone,
  kUniverseMismatch,
  kEmptyClass,
  kOverlappingClasses,
  kMissingEdge,
  kTrivialBlock,
  kOverlap,
  kUncoveredEdge,
};

struct ValidationReport {
  bool ok = true;
  Violation violation = Violation::kNone;
  int block = -1;
  Edge edge{-1, -1};
  std::string message;
};

/// Checks classes, completeness in g, pairwise edge-disjointness, exact cover of E(g) and,
/// for kNontrivialOnly, nontriviality. Reports the first violation found.
ValidationReport validate_decomposition(const Graph& g, const Decomposition& d);

}  // namespace bclab
