#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pls/graphs.hpp"

using namespace pls;

namespace {

BipartiteGraph random_graph(std::mt19937_64& rng, int a, int b, double p) {
  BipartiteGraph g(a, b);
  std::bernoulli_distribution edge(p);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

bool covers_all(const Matching& m, const Matching& m1, const Matching& m2) {
  for (std::size_t a = 0; a < m1.mate_a.size(); ++a)
    if (m1.mate_a[a] != kUnmatched && m.mate_a[a] == kUnmatched) return false;
  for (std::size_t b = 0; b < m2.mate_b.size(); ++b)
    if (m2.mate_b[b] != kUnmatched && m.mate_b[b] == kUnmatched) return false;
  return true;
}

// random maximal matching restricted to a subset of the edges
Matching random_matching(std::mt19937_64& rng, const BipartiteGraph& g) {
  Matching m(g.size_a(), g.size_b());
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  std::bernoulli_distribution keep(0.6);
  for (auto [a, b] : edges)
    if (keep(rng) && !m.covers_a(a) && !m.covers_b(b)) m.add(a, b);
  return m;
}

}  // namespace

TEST_CASE("matching and König on random graphs") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const BipartiteGraph g = random_graph(rng, 1 + trial % 7, 1 + (trial / 7) % 7, 0.35);
    const Matching m = max_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == oracle::matching_size(g));
    const VertexCover c = min_vertex_cover(g, m);
    CHECK(is_vertex_cover(g, c));
    CHECK(c.size() == m.size());

    const auto reach = alternating_reach_a(g, m);
    if (m.size() < g.size_a()) {
      std::set<int> nbrs;
      for (int a : reach)
        for (int b : g.neighbors(a)) nbrs.insert(b);
      CHECK(nbrs.size() < reach.size());
    }
  }
}

TEST_CASE("matching edge cases") {
  BipartiteGraph empty(3, 0);
  CHECK(max_matching(empty).size() == 0);
  CHECK(alternating_reach_a(empty, max_matching(empty)).size() == 3);
  CHECK_THROWS_AS(Matching::from_pairs(2, 2, {{0, 0}, {1, 0}}), std::exception);
  BipartiteGraph g(2, 2);
  g.add_edge(0, 0);
  g.add_edge(0, 0);
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbors(0).size() == 1);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("edge colouring is proper and uses max degree colours") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    BipartiteGraph g(1 + trial % 6, 1 + (trial / 6) % 6);
    std::uniform_int_distribution<int> a(0, g.size_a() - 1), b(0, g.size_b() - 1);
    const int m = trial % 20;
    for (int k = 0; k < m; ++k) g.add_edge(a(rng), b(rng));  // parallel edges allowed
    const auto colors = edge_color(g);
    REQUIRE(colors.size() == static_cast<std::size_t>(g.edge_count()));
    const int delta = g.max_degree();
    std::set<std::pair<int, int>> used_a, used_b;
    bool proper = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      const int c = colors[static_cast<std::size_t>(e)];
      CHECK(c >= 1);
      CHECK(c <= delta);
      proper = proper && used_a.insert({g.edges()[static_cast<std::size_t>(e)].first, c}).second;
      proper = proper && used_b.insert({g.edges()[static_cast<std::size_t>(e)].second, c}).second;
    }
    CHECK(proper);
  }
}

TEST_CASE("dm_merge covers both sides") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const BipartiteGraph g = random_graph(rng, 1 + trial % 6, 1 + (trial / 6) % 6, 0.45);
    const Matching m1 = random_matching(rng, g);
    const Matching m2 = random_matching(rng, g);
    REQUIRE(oracle::merge_exists(m1, m2));
    const Matching m = dm_merge(g, m1, m2);
    CHECK(is_matching(g, m));
    CHECK(covers_all(m, m1, m2));
    for (auto [a, b] : m.pairs()) CHECK((m1.mate_a[static_cast<std::size_t>(a)] == b || m2.mate_a[static_cast<std::size_t>(a)] == b));
  }
}

TEST_CASE("max flow equals min cut") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 6;
    FlowNetwork net(n, 0, n - 1);
    std::uniform_int_distribution<int> v(0, n - 1), cap(0, 5);
    for (int k = 0; k < 2 * n; ++k) {
      const int from = v(rng), to = v(rng);
      if (from == to || to == 0 || from == n - 1) continue;
      net.add_edge(from, to, cap(rng));
    }
    const Flow f = max_flow_integral(net);
    CHECK(is_feasible_flow(net, f));
    CHECK(f.value == oracle::min_cut(net));
    const auto side = residual_source_side(net, f);
    CHECK(side[0]);
    CHECK_FALSE(side[static_cast<std::size_t>(n - 1)]);
    CHECK(cut_capacity(net, side) == f.value);
  }
}
