#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heawood/block_cut.hpp"
#include "heawood/graph.hpp"

using namespace heawood;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Exhaustive max-clique by scanning all vertex subsets.
int max_clique_by_subsets(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (uint64_t mask = 1; mask < (1ULL << n); ++mask) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u) {
      if (!(mask >> u & 1)) continue;
      for (int v = u + 1; v < n && clique; ++v)
        if ((mask >> v & 1) && !g.has_edge(u, v)) clique = false;
    }
    if (clique) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Count connected components the slow way.
int component_count(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
  }
  return comps;
}

// Odd cycle through vertices 0,1,2 with pendant K5 blocks hung on each.
Graph three_k5_through_c5() {
  Graph g(17);
  for (int v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
  auto attach_k5 = [&](int hub, int base) {
    std::vector<int> vs{hub, base, base + 1, base + 2, base + 3};
    for (size_t a = 0; a < vs.size(); ++a)
      for (size_t b = a + 1; b < vs.size(); ++b) g.add_edge(vs[a], vs[b]);
  };
  attach_k5(0, 5);
  attach_k5(1, 9);
  attach_k5(2, 13);
  return g;
}

}  // namespace

TEST_CASE("graph construction, degrees, and edge listing") {
  Graph k5 = Graph::complete(5);
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);
  for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

  Graph c4 = Graph::cycle(4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.has_edge(3, 0));
  CHECK_FALSE(c4.has_edge(0, 2));

  Graph p4 = Graph::path(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.neighbors(1) == std::vector<int>{0, 2});

  auto es = Graph::from_edges(4, {{2, 0}, {3, 1}}).edges();
  CHECK(es == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.degree(-1), std::invalid_argument);
}

TEST_CASE("connectivity") {
  CHECK(Graph(0).connected());
  CHECK(Graph(1).connected());
  CHECK_FALSE(Graph(2).connected());
  CHECK(Graph::path(6).connected());
  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(two.connected());
  CHECK(two.connected_within(0b0011));
  CHECK(two.connected_within(0b1100));
  CHECK_FALSE(two.connected_within(0b0101));
}

TEST_CASE("induced subgraphs") {
  Graph k3 = induced_subgraph(Graph::complete(5), {0, 2, 4});
  CHECK(k3 == Graph::complete(3));

  Graph k6me = Graph::complete(6);
  k6me.remove_edge(0, 1);
  Graph p = induced_subgraph(k6me, {0, 1, 2});
  CHECK(p.edge_count() == 2);
  CHECK(p.has_edge(0, 2));
  CHECK(p.has_edge(1, 2));
  CHECK_FALSE(p.has_edge(0, 1));

  Graph j = join(Graph::complete(5), Graph::cycle(5));
  Graph c5_part = induced_subgraph(j, {5, 6, 7, 8, 9});
  CHECK(c5_part == Graph::cycle(5));
  CHECK(induced_subgraph(j, uint64_t{0b1111100000}) == Graph::cycle(5));

  CHECK_THROWS_AS(induced_subgraph(k3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(k3, {0, 7}), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(4)) == Graph(4));
  Graph cc5 = complement(Graph::cycle(5));
  CHECK(cc5.edge_count() == 5);
  CHECK(cc5.connected());
  for (int v = 0; v < 5; ++v) CHECK(cc5.degree(v) == 2);  // another 5-cycle

  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(9, 0.4, rng);
    Graph c = complement(g);
    CHECK(complement(c) == g);
    for (int v = 0; v < 9; ++v) CHECK(c.degree(v) == 8 - g.degree(v));
  }
}

TEST_CASE("join") {
  CHECK(join(Graph::complete(2), Graph::complete(3)) == Graph::complete(5));

  // The 4-cycle written (a, c, b, d) omits exactly ab and cd, so the join
  // with K4 is K8 minus two disjoint edges.
  Graph j = join(Graph::complete(4), Graph::cycle(4));
  Graph expected = Graph::complete(8);
  expected.remove_edge(4, 6);
  expected.remove_edge(5, 7);
  CHECK(j == expected);

  Graph big = join(Graph::complete(5), Graph::cycle(5));
  CHECK(big.vertex_count() == 10);
  CHECK(big.edge_count() == 40);

  for (int v = 0; v < 5; ++v)
    CHECK(big.degree(v) == Graph::complete(5).degree(v) + 5);
}

TEST_CASE("remove_vertex") {
  CHECK(remove_vertex(Graph::complete(5), 2) == Graph::complete(4));
  Graph p = remove_vertex(Graph::path(4), 3);
  CHECK(p == Graph::path(3));
  CHECK_THROWS_AS(remove_vertex(p, 5), std::invalid_argument);
}

TEST_CASE("clique search on pinned instances") {
  Graph k6me = Graph::complete(6);
  k6me.remove_edge(0, 1);
  auto five = contains_clique(k6me, 5);
  REQUIRE(five.has_value());
  CHECK(five->size() == 5);
  for (size_t a = 0; a < five->size(); ++a)
    for (size_t b = a + 1; b < five->size(); ++b)
      CHECK(k6me.has_edge((*five)[a], (*five)[b]));
  CHECK(clique_number(k6me) == 5);

  CHECK_FALSE(contains_clique(Graph::cycle(5), 3).has_value());
  CHECK(clique_number(Graph::cycle(5)) == 2);

  Graph k5c5 = join(Graph::complete(5), Graph::cycle(5));
  CHECK_FALSE(contains_clique(k5c5, 8).has_value());
  CHECK(contains_clique(k5c5, 7).has_value());
  CHECK(clique_number(k5c5) == 7);

  CHECK_THROWS_AS(contains_clique(k5c5, 0), std::invalid_argument);
  CHECK_FALSE(contains_clique(Graph(0), 1).has_value());
}

TEST_CASE("clique search agrees with subset enumeration") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + trial % 5;  // up to 10
    Graph g = random_graph(n, 0.55, rng);
    int expected = max_clique_by_subsets(g);
    CHECK(clique_number(g) == expected);
    auto witness = contains_clique(g, expected);
    REQUIRE(witness.has_value());
    for (size_t a = 0; a < witness->size(); ++a)
      for (size_t b = a + 1; b < witness->size(); ++b)
        CHECK(g.has_edge((*witness)[a], (*witness)[b]));
    CHECK_FALSE(contains_clique(g, expected + 1).has_value());
  }
}

TEST_CASE("degree_profile bridges graphs to the inequality checks") {
  Graph k6 = Graph::complete(6);
  DegreeProfile p = degree_profile(k6, k6.full_mask(), 1);
  CHECK(p.n == 6);
  CHECK(p.count_of(5) == 6);
  CHECK(p.face_high_count == 0);  // H(1) = 6, all degrees are 5

  Graph k7 = Graph::complete(7);
  DegreeProfile q = degree_profile(k7, k7.full_mask(), 1);
  CHECK(q.face_high_count == 7);  // degree 6 = H(1)
  DegreeProfile q_noface = degree_profile(k7, 0, 1);
  CHECK(q_noface.face_high_count == 0);

  CHECK_THROWS_AS(degree_profile(k6, 1ULL << 60, 1), std::invalid_argument);
  CHECK_NOTHROW(check_profile_inequalities(q, 1));
}

TEST_CASE("block decomposition of pinned shapes") {
  // Two triangles sharing vertex 2.
  Graph bowtie =
      Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  BlockCutTree t = block_cut_tree(bowtie);
  CHECK(t.blocks.size() == 2);
  CHECK(t.cutvertices == std::vector<int>{2});
  CHECK_FALSE(t.disconnected_input);
  for (const auto& b : t.blocks) {
    CHECK(b.vertices.size() == 3);
    CHECK(b.edge_count == 3);
  }

  BlockCutTree path = block_cut_tree(Graph::path(4));
  CHECK(path.blocks.size() == 3);
  CHECK(path.cutvertices == std::vector<int>{1, 2});
  long long edge_sum = 0;
  for (const auto& b : path.blocks) edge_sum += b.edge_count;
  CHECK(edge_sum == 3);

  BlockCutTree single = block_cut_tree(Graph(1));
  CHECK(single.blocks.size() == 1);
  CHECK(single.cutvertices.empty());

  BlockCutTree two = block_cut_tree(Graph::from_edges(6, {{0, 1}, {1, 2},
                                                          {0, 2}, {3, 4},
                                                          {4, 5}, {3, 5}}));
  CHECK(two.disconnected_input);
  CHECK(two.blocks.size() == 2);
  CHECK(two.cutvertices.empty());
}

TEST_CASE("three pendant K5 blocks hang off one odd cycle") {
  Graph g = three_k5_through_c5();
  BlockCutTree t = block_cut_tree(g);
  CHECK(t.blocks.size() == 4);
  CHECK(t.cutvertices == std::vector<int>{0, 1, 2});

  int cycle_block = -1;
  for (size_t b = 0; b < t.blocks.size(); ++b)
    if (t.blocks[b].vertices.size() == 5 && t.blocks[b].edge_count == 5)
      cycle_block = static_cast<int>(b);
  REQUIRE(cycle_block >= 0);
  CHECK(t.block_tree_degree(cycle_block) >= 3);

  CHECK(genus_lower_bound_blocks(g) == 3);
}

TEST_CASE("block genus bound on chained complete blocks") {
  // Three K7 blocks sharing single vertices in a chain.
  Graph g(19);
  auto add_complete = [&](int lo, int hi) {
    for (int u = lo; u <= hi; ++u)
      for (int v = u + 1; v <= hi; ++v) g.add_edge(u, v);
  };
  add_complete(0, 6);
  add_complete(6, 12);
  add_complete(12, 18);
  CHECK(genus_lower_bound_blocks(g) == 6);

  // Trees and cycles contribute nothing.
  CHECK(genus_lower_bound_blocks(Graph::path(7)) == 0);
  CHECK(genus_lower_bound_blocks(Graph::cycle(9)) == 0);
  CHECK(genus_lower_bound_blocks(Graph::complete(5)) == 1);
  CHECK(genus_lower_bound_blocks(Graph::complete(7)) == 2);
}

TEST_CASE("block decomposition properties on random graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 4 + trial % 7;  // up to 10
    Graph g = random_graph(n, 0.35, rng);
    BlockCutTree t = block_cut_tree(g);

    long long edge_sum = 0;
    for (const auto& b : t.blocks) edge_sum += b.edge_count;
    CHECK(edge_sum == g.edge_count());

    // The block-cut graph is a forest with one tree per component:
    // nodes - edges = components.
    long long nodes = static_cast<long long>(t.blocks.size()) +
                      static_cast<long long>(t.cutvertices.size());
    long long incidences = 0;
    for (const auto& row : t.block_cutvertices) incidences += row.size();
    CHECK(nodes - incidences == component_count(g));
    CHECK(t.disconnected_input == (component_count(g) > 1));

    // Block vertex sets cover all vertices.
    uint64_t covered = 0;
    for (const auto& b : t.blocks)
      for (int v : b.vertices) covered |= 1ULL << v;
    CHECK(covered == g.full_mask());
  }
}
