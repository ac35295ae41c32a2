#include "bclab/decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace bclab {
namespace {

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::vector<int> parse_ids(std::string_view text) {
  std::vector<int> ids;
  if (text.empty()) return ids;
  std::size_t pos = 0;
  while (true) {
    int value = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == first || value < 0)
      throw std::invalid_argument("certificate: bad vertex list '" + std::string(text) + "'");
    ids.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("certificate: expected ',' in vertex list");
    ++pos;
  }
  return ids;
}

std::string_view field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key || token.size() < key.size() + 1 || token[key.size()] != '=')
    throw std::invalid_argument("certificate: expected field '" + std::string(key) + "='");
  return token.substr(key.size() + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

VertexSet to_set(const std::vector<int>& ids, int n) {
  VertexSet s(n);
  for (int v : ids) {
    if (v >= n) throw std::invalid_argument("certificate: vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

}  // namespace

std::string format_block(const BipartiteBlock& block) {
  return "BLOCK a=" + join_ids(block.a.members()) + " b=" + join_ids(block.b.members());
}

std::string format_decomposition(const Decomposition& d) {
  std::string out;
  for (const auto& b : d.blocks) out += format_block(b) + "\n";
  return out;
}

std::string format_cover(const SparseCover& cover) {
  std::string c4;
  for (std::size_t i = 0; i < cover.cycles.size(); ++i) {
    if (i) c4 += ';';
    c4 += join_ids(std::vector<int>(cover.cycles[i].begin(), cover.cycles[i].end()));
  }
  return "COVER isolated=" + join_ids(cover.isolated.members()) + " c4=" + c4;
}

Decomposition parse_decomposition(std::string_view text, int n, DecompositionKind kind) {
  Decomposition d{kind, {}};
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 3 || toks[0] != "BLOCK")
      throw std::invalid_argument("certificate: expected 'BLOCK a=<ids> b=<ids>'");
    d.blocks.push_back({to_set(parse_ids(field(toks[1], "a")), n), to_set(parse_ids(field(toks[2], "b")), n)});
  }
  return d;
}

SparseCover parse_cover(std::string_view line, int n) {
  const auto toks = tokens(line);
  if (toks.size() != 3 || toks[0] != "COVER")
    throw std::invalid_argument("certificate: expected 'COVER isolated=<ids> c4=<ids;...>'");
  SparseCover cover;
  cover.isolated = to_set(parse_ids(field(toks[1], "isolated")), n);
  std::string_view rest = field(toks[2], "c4");
  while (!rest.empty()) {
    std::size_t semi = rest.find(';');
    auto ids = parse_ids(rest.substr(0, semi));
    if (ids.size() != 4) throw std::invalid_argument("certificate: a c4 entry needs 4 vertices");
    (void)to_set(ids, n);
    std::sort(ids.begin(), ids.end());
    cover.cycles.push_back({ids[0], ids[1], ids[2], ids[3]});
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
  }
  cover.gamma = cover.isolated.count() + 3 * static_cast<int>(cover.cycles.size());
  return cover;
}

}  // namespace bclab
