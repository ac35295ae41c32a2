#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bclab/vertex_set.hpp"

namespace bclab {

/// Complete bipartite subgraph with vertex classes a and b.
struct BipartiteBlock {
  VertexSet a;
  VertexSet b;

  std::int64_t edge_count() const { return std::int64_t{a.count()} * b.count(); }
  bool is_star() const { return std::min(a.count(), b.count()) == 1; }
  bool is_nontrivial() const { return std::min(a.count(), b.count()) >= 2; }

  friend bool operator==(const BipartiteBlock&, const BipartiteBlock&) = default;
};

enum class DecompositionKind { kAny, kNontrivialOnly };

struct Decomposition {
  DecompositionKind kind = DecompositionKind::kAny;
  std::vector<BipartiteBlock> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
};

/// Induced subgraph whose components are isolated vertices and induced 4-cycles.
struct SparseCover {
  VertexSet isolated;
  /// Vertex sets of the 4-cycles, each sorted ascending.
  std::vector<std::array<int, 4>> cycles;
  int gamma = 0;
};

// Certificate text format, one record per line:
//   BLOCK a=<ids> b=<ids>
//   COVER isolated=<ids> c4=<ids>;<ids>;...
// <ids> is a comma separated ascending list of decimal vertex ids, possibly empty.

std::string format_block(const BipartiteBlock& block);
std::string format_decomposition(const Decomposition& d);
std::string format_cover(const SparseCover& cover);

/// Parses BLOCK lines over the universe 0..n-1. Throws std::invalid_argument on bad input.
Decomposition parse_decomposition(std::string_view text, int n,
                                  DecompositionKind kind = DecompositionKind::kAny);
SparseCover parse_cover(std::string_view line, int n);

}  // namespace bclab
