#include <set>
#include <vector>

#include "doctest.h"

#include "bclab/builders.hpp"
#include "bclab/decomposition.hpp"
#include "bclab/independence.hpp"
#include "bclab/random.hpp"

using namespace bclab;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph::from_edges(n, e);
}

BipartiteBlock block(int n, std::initializer_list<int> a, std::initializer_list<int> b) {
  return {VertexSet(n, a), VertexSet(n, b)};
}

BipartiteBlock complete_bipartite(int na, int nb) {
  BipartiteBlock blk{VertexSet(na + nb), VertexSet(na + nb)};
  for (int i = 0; i < na; ++i) blk.a.insert(i);
  for (int i = 0; i < nb; ++i) blk.b.insert(na + i);
  return blk;
}

std::set<std::pair<int, int>> edge_pairs(const BipartiteBlock& blk) {
  std::set<std::pair<int, int>> out;
  blk.a.for_each([&](int x) { blk.b.for_each([&](int y) { out.insert({std::min(x, y), std::max(x, y)}); }); });
  return out;
}

}  // namespace

TEST_CASE("star decompositions") {
  const Graph k3 = Graph::complete(3);
  const auto d = star_decomposition(k3, VertexSet(3, {0}));
  REQUIRE(d.size() == 2);
  CHECK(d.blocks[0] == block(3, {1}, {0, 2}));
  CHECK(d.blocks[1] == block(3, {2}, {0}));
  CHECK(validate_decomposition(k3, d).ok);

  const auto c5 = star_decomposition(cycle(5), VertexSet(5, {0, 2}));
  CHECK(c5.size() == 3);
  CHECK(validate_decomposition(cycle(5), c5).ok);

  CHECK(star_decomposition(Graph(4), VertexSet::full(4)).blocks.empty());
  CHECK_THROWS_AS(star_decomposition(k3, VertexSet(3, {0, 1})), std::invalid_argument);
}

TEST_CASE("star decomposition from a maximum independent set") {
  for (int t = 0; t < 100; ++t) {
    const Graph g = gnp_sample({11, 0.4, derive_trial_seed(11, t)});
    const auto a = alpha(g);
    const auto d = star_decomposition(g, a.witness);
    CHECK(validate_decomposition(g, d).ok);
    bool positive = true;
    for (int v = 0; v < g.order(); ++v)
      if (!a.witness.contains(v) && g.degree(v) == 0) positive = false;
    if (positive)
      CHECK(d.size() == g.order() - a.size);
    else
      CHECK(d.size() <= g.order() - a.size);
  }
}

TEST_CASE("beta decompositions") {
  const Graph c4 = cycle(4);
  const auto one = beta_decomposition(c4, block(4, {0, 2}, {1, 3}));
  CHECK(one.size() == 1);
  CHECK(validate_decomposition(c4, one).ok);

  const Graph k4 = Graph::complete(4);
  const auto three = beta_decomposition(k4, block(4, {0}, {1}));
  CHECK(three.size() == 3);
  CHECK(validate_decomposition(k4, three).ok);

  CHECK_THROWS_AS(beta_decomposition(k4, block(4, {0}, {1, 2})), std::invalid_argument);

  for (int t = 0; t < 100; ++t) {
    const Graph g = gnp_sample({9, 0.5, derive_trial_seed(12, t)});
    const auto b = beta(g);
    if (!b.witness) continue;
    const auto d = beta_decomposition(g, *b.witness);
    CHECK(validate_decomposition(g, d).ok);
    CHECK(d.size() <= 9 - b.size + 1);
  }
}

TEST_CASE("split block examples") {
  const auto k26 = split_block(complete_bipartite(2, 6), 8);
  REQUIRE(k26.size() == 2);
  for (const auto& p : k26) {
    CHECK(p.a.count() == 2);
    CHECK(p.b.count() == 3);
  }
  const auto k22 = split_block(complete_bipartite(2, 2), 4);
  REQUIRE(k22.size() == 1);
  CHECK(k22[0] == complete_bipartite(2, 2));

  const auto k44 = split_block(complete_bipartite(4, 4), 4);
  REQUIRE(k44.size() == 4);
  for (const auto& p : k44) CHECK(p.edge_count() == 4);

  // Ties split class a; the first half keeps the extra vertex.
  const auto k55 = split_block(complete_bipartite(5, 5), 15);
  REQUIRE(k55.size() == 2);
  CHECK(k55[0].a == VertexSet(10, {0, 1, 2}));
  CHECK(k55[1].a == VertexSet(10, {3, 4}));

  CHECK_THROWS_AS(split_block(complete_bipartite(1, 3), 4), std::invalid_argument);
  CHECK_THROWS_AS(split_block(complete_bipartite(2, 2), 3), std::domain_error);
  CHECK_THROWS_AS(split_block(complete_bipartite(3, 3), 5), std::domain_error);
}

TEST_CASE("split block partitions the block") {
  for (int na = 2; na <= 9; ++na)
    for (int nb = 2; nb <= 9; ++nb)
      for (int max_edges : {4, 6, 9, 12, 20}) {
        const auto blk = complete_bipartite(na, nb);
        std::vector<BipartiteBlock> pieces;
        try {
          pieces = split_block(blk, max_edges);
        } catch (const std::domain_error&) {
          continue;
        }
        std::set<std::pair<int, int>> seen;
        std::size_t total = 0;
        for (const auto& p : pieces) {
          CHECK(p.is_nontrivial());
          CHECK(p.edge_count() <= max_edges);
          const auto e = edge_pairs(p);
          total += e.size();
          seen.insert(e.begin(), e.end());
        }
        CHECK(total == static_cast<std::size_t>(na * nb));
        CHECK(seen == edge_pairs(blk));
        const auto bound = 2 * ((na * nb + max_edges - 1) / max_edges);
        CHECK(static_cast<int>(pieces.size()) <= bound);
      }
}

TEST_CASE("validation reports the first violation") {
  const Graph c4 = cycle(4);
  CHECK(validate_decomposition(c4, Decomposition{DecompositionKind::kAny, {block(4, {0, 2}, {1, 3})}}).ok);

  const Graph k3 = Graph::complete(3);
  const auto missing = validate_decomposition(k3, Decomposition{DecompositionKind::kAny, {block(3, {0}, {1, 2})}});
  CHECK_FALSE(missing.ok);
  CHECK(missing.violation == Violation::kUncoveredEdge);
  CHECK(missing.edge == Edge{1, 2});

  const auto overlap = validate_decomposition(
      k3, Decomposition{DecompositionKind::kAny, {block(3, {0}, {1, 2}), block(3, {1}, {0, 2})}});
  CHECK_FALSE(overlap.ok);
  CHECK(overlap.violation == Violation::kOverlap);
  CHECK(overlap.block == 1);

  const auto non_edge = validate_decomposition(c4, Decomposition{DecompositionKind::kAny, {block(4, {0}, {2})}});
  CHECK(non_edge.violation == Violation::kMissingEdge);

  const auto trivial = validate_decomposition(
      k3, Decomposition{DecompositionKind::kNontrivialOnly, {block(3, {0}, {1, 2}), block(3, {1}, {2})}});
  CHECK(trivial.violation == Violation::kTrivialBlock);

  const auto empty_class = validate_decomposition(c4, Decomposition{DecompositionKind::kAny, {block(4, {}, {1})}});
  CHECK(empty_class.violation == Violation::kEmptyClass);
  const auto shared = validate_decomposition(c4, Decomposition{DecompositionKind::kAny, {block(4, {0, 1}, {1})}});
  CHECK(shared.violation == Violation::kOverlappingClasses);
  const auto universe = validate_decomposition(c4, Decomposition{DecompositionKind::kAny, {block(5, {0}, {1})}});
  CHECK(universe.violation == Violation::kUniverseMismatch);
}

TEST_CASE("certificate text format") {
  Decomposition d{DecompositionKind::kAny, {block(5, {0, 1}, {2, 3}), block(5, {4}, {0})}};
  const std::string text = format_decomposition(d);
  CHECK(text == "BLOCK a=0,1 b=2,3\nBLOCK a=4 b=0\n");
  const auto back = parse_decomposition(text, 5);
  CHECK(back.blocks == d.blocks);
  CHECK_THROWS_AS(parse_decomposition("BLOCK a=0 b=9\n", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_decomposition("BLOK a=0 b=1\n", 5), std::invalid_argument);

  SparseCover cover{VertexSet(9, {8}), {{0, 1, 2, 3}, {4, 5, 6, 7}}, 7};
  const std::string line = format_cover(cover);
  CHECK(line == "COVER isolated=8 c4=0,1,2,3;4,5,6,7");
  const auto parsed = parse_cover(line, 9);
  CHECK(parsed.isolated == cover.isolated);
  CHECK(parsed.cycles == cover.cycles);
  CHECK(parsed.gamma == 7);
  CHECK(format_cover(SparseCover{VertexSet(3), {}, 0}) == "COVER isolated= c4=");
}
