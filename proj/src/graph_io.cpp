#include "bclab/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <vector>

namespace bclab {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos)
    lines.pop_back();
  return lines;
}

// Exactly two non-negative decimal integers separated by blanks.
std::optional<std::pair<std::int64_t, std::int64_t>> parse_pair(std::string_view line) {
  std::int64_t values[2];
  std::size_t pos = 0;
  for (auto& value : values) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first || value < 0) return std::nullopt;
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  if (pos != line.size()) return std::nullopt;
  return std::pair{values[0], values[1]};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw GraphFormatError(GraphFormatErrorKind::kMalformedHeader, 1, "missing header \"n m\"");
  const auto header = parse_pair(lines[0]);
  if (!header || header->first > (1 << 24))
    throw GraphFormatError(GraphFormatErrorKind::kMalformedHeader, 1, "malformed header, expected \"n m\"");
  const auto n = static_cast<int>(header->first);
  const auto m = header->second;
  if (static_cast<std::int64_t>(lines.size()) - 1 != m)
    throw GraphFormatError(GraphFormatErrorKind::kEdgeCountMismatch, 1,
                           "header announces " + std::to_string(m) + " edges, found " +
                               std::to_string(lines.size() - 1));

  std::vector<VertexSet> seen(static_cast<std::size_t>(n), VertexSet(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const auto pair = parse_pair(lines[i]);
    if (!pair) throw GraphFormatError(GraphFormatErrorKind::kMalformedEdgeLine, lineno, "expected \"u v\"");
    auto [u, v] = *pair;
    if (u >= n || v >= n)
      throw GraphFormatError(GraphFormatErrorKind::kVertexOutOfRange, lineno,
                             "vertex index out of range for n=" + std::to_string(n));
    if (u == v)
      throw GraphFormatError(GraphFormatErrorKind::kSelfLoop, lineno, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    const int a = static_cast<int>(u), b = static_cast<int>(v);
    if (seen[a].contains(b))
      throw GraphFormatError(GraphFormatErrorKind::kDuplicateEdge, lineno,
                             "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    seen[a].insert(b);
    edges.push_back({a, b});
  }
  return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace bclab
