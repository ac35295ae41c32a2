#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "bclab/builders.hpp"
#include "bclab/independence.hpp"
#include "bclab/partition.hpp"
#include "bclab/random.hpp"
#include "bclab/sparse_cover.hpp"

using namespace bclab;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph::from_edges(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}

Graph disjoint_union(const Graph& x, const Graph& y) {
  std::vector<Edge> e = x.edges();
  for (const auto& f : y.edges()) e.push_back({f.u + x.order(), f.v + x.order()});
  return Graph::from_edges(x.order() + y.order(), e);
}

}  // namespace

TEST_CASE("alpha on small graphs") {
  CHECK(alpha(Graph::complete(4)).size == 1);
  CHECK(alpha(Graph(7)).size == 7);
  CHECK(alpha(Graph(0)).size == 0);
  CHECK(alpha(cycle(5)).size == 2);
  CHECK(max_clique(Graph::complete(6)).size == 6);
}

TEST_CASE("alpha matches the exhaustive subset scan") {
  for (int t = 0; t < 200; ++t) {
    const Graph g = gnp_sample({10, 0.5, derive_trial_seed(101, t)});
    const auto r = alpha(g);
    CHECK(r.size == oracle::alpha_by_subsets(g));
    CHECK(r.witness.count() == r.size);
    CHECK(is_independent_set(g, r.witness));
  }
}

TEST_CASE("beta on small graphs") {
  const auto c4 = beta(cycle(4));
  CHECK(c4.size == 4);
  REQUIRE(c4.witness);
  CHECK(c4.witness->a.count() == 2);
  CHECK(beta(Graph::complete(3)).size == 2);
  const auto none = beta(Graph(5));
  CHECK(none.size == 0);
  CHECK_FALSE(none.witness);
  CHECK(beta(star(4)).size == 5);
}

TEST_CASE("beta matches the exhaustive class-pair scan") {
  for (int t = 0; t < 200; ++t) {
    const Graph g = gnp_sample({9, 0.5, derive_trial_seed(202, t)});
    const auto r = beta(g);
    CHECK(r.size == oracle::beta_by_class_pairs(g));
    if (g.edge_count() > 0) {
      CHECK(r.size >= 2);
      REQUIRE(r.witness);
      CHECK(is_induced_complete_bipartite(g, r.witness->a, r.witness->b));
      CHECK(r.witness->a.count() + r.witness->b.count() == r.size);
    }
  }
}

TEST_CASE("alpha and beta at dense Monte Carlo scale") {
  for (int t = 0; t < 5; ++t) {
    const Graph g = gnp_sample({80, 0.5, derive_trial_seed(303, t)});
    const auto a = alpha(g);
    CHECK(is_independent_set(g, a.witness));
    const auto b = beta(g);
    REQUIRE(b.witness);
    CHECK(is_induced_complete_bipartite(g, b.witness->a, b.witness->b));
  }
}

TEST_CASE("exact tau examples") {
  CHECK(exact_tau(Graph::complete(4)).tau == 3);
  CHECK(exact_tau(cycle(4)).tau == 1);
  CHECK(exact_tau(cycle(5)).tau == 3);
  const auto empty = exact_tau(Graph(6));
  CHECK(empty.tau == 0);
  CHECK(empty.certificate.blocks.empty());
  CHECK(exact_tau(star(5)).tau == 1);
}

TEST_CASE("Graham-Pollak for small complete graphs") {
  for (int n = 2; n <= 7; ++n) {
    const auto r = exact_tau(Graph::complete(n));
    CHECK(r.tau == n - 1);
    CHECK(r.certificate.size() == n - 1);
    CHECK(validate_decomposition(Graph::complete(n), r.certificate).ok);
  }
}

TEST_CASE("exact tau and tau' match the edge-subset oracle") {
  for (int t = 0; t < 60; ++t) {
    const Graph g = gnp_sample({7, 0.35, derive_trial_seed(404, t)});
    if (g.edge_count() > 16) continue;
    const auto tau = exact_tau(g);
    CHECK(tau.tau == oracle::tau_by_edge_subsets(g, false));
    CHECK(validate_decomposition(g, tau.certificate).ok);

    const auto tp = exact_tau_prime(g);
    const int expected = oracle::tau_by_edge_subsets(g, true);
    if (expected < 0) {
      CHECK(tp.tau_prime.is_infinite());
      CHECK_FALSE(tp.certificate);
    } else {
      CHECK(tp.tau_prime.value() == expected);
      REQUIRE(tp.certificate);
      CHECK(tp.certificate->kind == DecompositionKind::kNontrivialOnly);
      CHECK(validate_decomposition(g, *tp.certificate).ok);
    }
  }
}

TEST_CASE("tau upper bounds from alpha and beta") {
  for (int t = 0; t < 200; ++t) {
    const Graph g = gnp_sample({9, 0.5, derive_trial_seed(505, t)});
    const int tau = exact_tau(g).tau;
    CHECK(tau <= 9 - alpha(g).size);
    const int b = beta(g).size;
    if (b >= 1) CHECK(tau <= 9 - b + 1);
  }
}

TEST_CASE("tau prime examples") {
  CHECK(exact_tau_prime(cycle(4)).tau_prime == BlockCount(1));
  CHECK(exact_tau_prime(star(3)).tau_prime.is_infinite());
  CHECK(exact_tau_prime(Graph::complete(4)).tau_prime.is_infinite());
  CHECK(exact_tau_prime(Graph(3)).tau_prime == BlockCount(0));
  CHECK((BlockCount::infinite() + BlockCount(3)).is_infinite());
  CHECK(BlockCount::infinite().to_string() == "inf");
}

TEST_CASE("tau prime is infinite when an edge has no nontrivial block") {
  for (int t = 0; t < 100; ++t) {
    const Graph g = gnp_sample({7, 0.5, derive_trial_seed(606, t)});
    if (!every_edge_in_nontrivial_biclique(g)) CHECK(exact_tau_prime(g).tau_prime.is_infinite());
  }
  CHECK_FALSE(every_edge_in_nontrivial_biclique(star(3)));
  CHECK(every_edge_in_nontrivial_biclique(cycle(4)));
}

TEST_CASE("lemma 3.4 minimum") {
  const auto c4 = lemma34_min(cycle(4));
  CHECK(c4.value == 1);
  CHECK(c4.best_u.count() == 4);
  const auto k4 = lemma34_min(Graph::complete(4));
  CHECK(k4.value == 3);
  CHECK(k4.best_u.count() == 1);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gnp_sample({8, 0.5, derive_trial_seed(707, t)});
    CHECK(lemma34_min(g).value == exact_tau(g).tau);
  }
}

TEST_CASE("budget exhaustion carries bounds") {
  const Graph k7 = Graph::complete(7);
  try {
    exact_tau(k7, SearchBudget{50});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.lower_bound() <= BlockCount(6));
    CHECK(e.upper_bound() >= BlockCount(6));
    CHECK(e.upper_bound() <= BlockCount(6));
  }
  CHECK_THROWS_AS(alpha(gnp_sample({60, 0.5, 1}), SearchBudget{5}), BudgetExceeded);
  CHECK_THROWS_AS(exact_tau(Graph(65)), std::invalid_argument);
}

TEST_CASE("induced 4-cycles") {
  CHECK(list_induced_c4(cycle(4)).size() == 1);
  CHECK(list_induced_c4(Graph::complete(4)).empty());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gnp_sample({12, 0.3, seed});
    CHECK(list_induced_c4(g) == oracle::induced_c4_by_subsets(g));
  }
}

TEST_CASE("gamma examples") {
  const Graph c4_plus = disjoint_union(cycle(4), Graph(1));
  const auto a = gamma_max(c4_plus);
  CHECK(a.gamma == 4);
  CHECK(exact_tau(c4_plus).tau == 5 - a.gamma);

  const Graph two_c4 = disjoint_union(cycle(4), cycle(4));
  const auto b = gamma_max(two_c4);
  CHECK(b.gamma == 6);
  CHECK(b.cover.cycles.size() == 2);
  CHECK(exact_tau(two_c4).tau == 8 - b.gamma);

  const Graph p3 = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto c = gamma_max(p3);
  CHECK(c.gamma == 2);
  CHECK(c.cover.isolated == VertexSet(3, {0, 2}));
  CHECK(exact_tau(p3).tau == 3 - c.gamma);
}

TEST_CASE("gamma covers validate and give valid decompositions") {
  for (int t = 0; t < 100; ++t) {
    const Graph g = gnp_sample({14, 0.2, derive_trial_seed(808, t)});
    const auto r = gamma_max(g);
    CHECK(is_valid_sparse_cover(g, r.cover));
    const auto d = sparse_cover_decomposition(g, r.cover);
    CHECK(validate_decomposition(g, d).ok);
    CHECK(d.size() == 14 - r.gamma);
  }
}

TEST_CASE("structural condition implies tau = n - gamma") {
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const Graph g = gnp_sample({12, 0.1, derive_trial_seed(909, t)});
    if (!nontrivial_bicliques_are_disjoint_c4s(g)) continue;
    ++checked;
    CHECK(exact_tau(g).tau == 12 - gamma_max(g).gamma);
  }
  CHECK(checked >= 100);
}

TEST_CASE("structural condition") {
  CHECK(nontrivial_bicliques_are_disjoint_c4s(cycle(4)));
  CHECK(nontrivial_bicliques_are_disjoint_c4s(star(4)));
  CHECK_FALSE(nontrivial_bicliques_are_disjoint_c4s(Graph::complete(4)));
  // Two 4-cycles sharing vertex 0.
  const Graph bowtie = Graph::from_edges(
      7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
  CHECK_FALSE(nontrivial_bicliques_are_disjoint_c4s(bowtie));
  // K_{2,3} contains three 4-cycles.
  const Graph k23 = Graph::from_edges(5, std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK_FALSE(nontrivial_bicliques_are_disjoint_c4s(k23));
}
