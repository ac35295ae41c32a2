#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bclab/graph.hpp"

namespace bclab {

enum class GraphFormatErrorKind {
  kMalformedHeader,
  kMalformedEdgeLine,
  kEdgeCountMismatch,
  kVertexOutOfRange,
  kDuplicateEdge,
  kSelfLoop,
};

class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(GraphFormatErrorKind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  GraphFormatErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  GraphFormatErrorKind kind_;
  int line_;
};

/// Edge-list text: header "n m", then m lines "u v" (0 <= u < v < n). Blank trailing lines
/// are ignored; an edge given as "v u" is accepted and normalized.
Graph parse_graph(std::string_view text);

/// Canonical form: header then edges in ascending (u, v) order, LF terminated.
std::string serialize_graph(const Graph& g);

}  // namespace bclab
