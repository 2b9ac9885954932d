#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>
#include <vector>

#include "doctest.h"
#include "kout/connectivity.hpp"
#include "kout/edge_list_io.hpp"
#include "kout/errors.hpp"
#include "kout/generators.hpp"
#include "kout/graph.hpp"
#include "kout/rng.hpp"

using namespace kout;

namespace {

// Independent connectivity oracle: iterative DFS, nothing shared with the
// union-find implementation under test.
std::vector<std::uint32_t> dfs_labels(std::uint32_t n,
                                      const std::vector<Edge>& edges) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::uint32_t> label(n, n);
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    std::vector<std::uint32_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t w : adj[v]) {
        if (label[w] == n) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool same_partition(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pairs.insert({a[i], b[i]});
  }
  std::set<std::uint32_t> lhs, rhs;
  for (auto [x, y] : pairs) {
    lhs.insert(x);
    rhs.insert(y);
  }
  return pairs.size() == lhs.size() && pairs.size() == rhs.size();
}

std::vector<Edge> random_edges(std::uint32_t n, SplitMix64& engine) {
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (engine.next_double() < 0.22) edges.push_back(Edge{u, v});
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("make_edge canonicalizes and rejects self-loops") {
  Edge e = make_edge(7, 3);
  CHECK(e.u == 3);
  CHECK(e.v == 7);
  CHECK(make_edge(3, 7) == e);
  CHECK_THROWS_AS(make_edge(4, 4), SelfLoop);
}

TEST_CASE("Graph deduplicates, sorts, and serves adjacency") {
  std::vector<std::pair<VertexId, VertexId>> pairs = {
      {2, 1}, {1, 2}, {0, 2}, {0, 1}, {2, 0}};
  Graph g(4, pairs);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.max_degree() == 2);
  CHECK(g.has_edge(Edge{0, 1}));
  CHECK_FALSE(g.has_edge(Edge{1, 3}));
  std::span<const VertexId> nb = g.neighbors(2);
  CHECK(std::vector<VertexId>(nb.begin(), nb.end()) ==
        std::vector<VertexId>{0, 1});
  CHECK(std::is_sorted(nb.begin(), nb.end()));
}

TEST_CASE("Graph rejects out-of-range endpoints") {
  std::vector<Edge> edges = {{0, 5}};
  CHECK_THROWS_AS(Graph(3, edges), VertexOutOfRange);
}

TEST_CASE("gen_complete") {
  Graph g = gen_complete(7);
  CHECK(g.edge_count() == 21);
  for (VertexId v = 0; v < 7; ++v) CHECK(g.degree(v) == 6);
  CHECK(gen_complete(0).vertex_count() == 0);
  CHECK(gen_complete(1).edge_count() == 0);
}

TEST_CASE("gen_two_cliques_matching layout") {
  // n = 12, k = 2: cliques {0..5} and {6..11}, matching (i, 6+i) for
  // i < n/k = 6, i.e. a full matching here.
  Graph g = gen_two_cliques_matching(12, 2);
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 2 * 15 + 6);
  for (std::uint32_t i = 0; i < 6; ++i) {
    CHECK(g.has_edge(Edge{i, i + 6}));
  }
  CHECK_FALSE(g.has_edge(Edge{0, 7}));
  CHECK(is_connected(g));

  // Removing the matching disconnects the halves.
  std::vector<Edge> no_matching;
  for (const Edge& e : g.edges()) {
    if (!(e.u < 6 && e.v >= 6)) no_matching.push_back(e);
  }
  Partition part = components(12, no_matching);
  CHECK(part.component_count == 2);

  // n = 60, k = 4: only n/k = 15 of the 30 clique pairs are matched.
  Graph h = gen_two_cliques_matching(60, 4);
  CHECK(h.edge_count() == 2 * (30 * 29 / 2) + 15);
  CHECK(h.has_edge(Edge{14, 44}));
  CHECK_FALSE(h.has_edge(Edge{15, 45}));

  CHECK_THROWS_AS(gen_two_cliques_matching(13, 2), BadParameters);
  CHECK_THROWS_AS(gen_two_cliques_matching(12, 5), BadParameters);
}

TEST_CASE("gen_leafy_tree census") {
  for (TreeShape shape : {TreeShape::path, TreeShape::star, TreeShape::random}) {
    Graph g = gen_leafy_tree(64, 4, shape, 11);
    CHECK(g.vertex_count() == 64);
    CHECK(g.edge_count() == 63);  // a tree
    CHECK(is_connected(g));
    // 8 internal vertices of degree >= 2k = 8; 56 leaves of degree 1.
    std::uint32_t internals = 0, leaves = 0;
    for (VertexId v = 0; v < 64; ++v) {
      if (g.degree(v) == 1) {
        ++leaves;
      } else {
        CHECK(g.degree(v) >= 8);
        ++internals;
      }
    }
    CHECK(internals == 8);
    CHECK(leaves == 56);
  }
  // Star shape: one hub adjacent to all other internals.
  Graph star = gen_leafy_tree(64, 4, TreeShape::star);
  std::uint32_t max_deg = star.max_degree();
  CHECK(max_deg == 7 + 7);  // 7 internal spokes + 2k-1 leaves
  CHECK_THROWS_AS(gen_leafy_tree(63, 4, TreeShape::path), BadParameters);
}

TEST_CASE("gen_clique_plus_small_cliques layout") {
  Graph g = gen_clique_plus_small_cliques(64, 2);
  CHECK(g.vertex_count() == 64);
  // K_32 plus 16 disjoint K_2.
  CHECK(g.edge_count() == 32 * 31 / 2 + 16);
  CHECK(g.edge_count() * 8 >= 64ull * 64);
  Partition part = components(g);
  CHECK(part.component_count == 17);
  CHECK_THROWS_AS(gen_clique_plus_small_cliques(32, 2), BadParameters);
}

TEST_CASE("gen_circulant structure and cut degree") {
  Graph g = gen_circulant(10, 2);
  CHECK(g.edge_count() == 20);
  for (VertexId v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
  CHECK(brute_force_edge_connectivity(g) == 4);

  Graph h = gen_circulant(9, 3);
  CHECK(h.edge_count() == 27);
  CHECK(brute_force_edge_connectivity(h) == 6);

  CHECK_THROWS_AS(gen_circulant(8, 4), BadParameters);
  CHECK_THROWS_AS(gen_circulant(8, 0), BadParameters);
}

TEST_CASE("gen_gnp endpoints and determinism") {
  CHECK(gen_gnp(20, 0.0, 5).edge_count() == 0);
  CHECK(gen_gnp(20, 1.0, 5).edge_count() == 190);
  Graph a = gen_gnp(24, 0.3, 99);
  Graph b = gen_gnp(24, 0.3, 99);
  CHECK(a.edges() == b.edges());
  Graph c = gen_gnp(24, 0.3, 100);
  CHECK(a.edges() != c.edges());
}

TEST_CASE("gen_random_regular degrees") {
  Graph g = gen_random_regular(12, 3, 17);
  for (VertexId v = 0; v < 12; ++v) CHECK(g.degree(v) == 3);
  CHECK_THROWS_AS(gen_random_regular(11, 3, 17), BadParameters);
}

TEST_CASE("gen_near_regular degree window") {
  for (std::uint64_t seed : {1, 2, 3}) {
    Graph g = gen_near_regular(32, 5, seed);
    for (VertexId v = 0; v < 32; ++v) {
      CHECK(g.degree(v) >= 5);
      CHECK(g.degree(v) <= 10);
    }
  }
  CHECK_THROWS_AS(gen_near_regular(5, 1, 1), BadParameters);
}

TEST_CASE("edge list format round-trips") {
  SplitMix64 engine(404);
  for (int rep = 0; rep < 25; ++rep) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(engine.next_below(63));
    Graph g(n, random_edges(n, engine));
    Graph back = parse_edge_list(format_edge_list(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("edge list exact text") {
  Graph g(3, std::vector<Edge>{{0, 2}, {0, 1}});
  CHECK(format_edge_list(g) == "3\n0 1\n0 2\n");
  Graph empty(2, std::vector<Edge>{});
  CHECK(format_edge_list(empty) == "2\n");
}

TEST_CASE("edge list file IO") {
  Graph g(5, std::vector<Edge>{{0, 4}, {1, 2}});
  const char* path = "io_roundtrip.edges";
  write_edge_list(g, path);
  Graph back = read_edge_list(path);
  CHECK(back.edges() == g.edges());
  CHECK(back.vertex_count() == 5);
  std::remove(path);
  CHECK_THROWS_AS(read_edge_list("does_not_exist.edges"), ParseError);
}

TEST_CASE("edge list parse errors") {
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("abc\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 9\n"), VertexOutOfRange);
  CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), SelfLoop);
}

TEST_CASE("DisjointSets bookkeeping") {
  DisjointSets ds(5);
  CHECK(ds.set_count() == 5);
  CHECK(ds.unite(0, 1));
  CHECK(ds.unite(1, 2));
  CHECK_FALSE(ds.unite(0, 2));
  CHECK(ds.set_count() == 3);
  CHECK(ds.set_size(2) == 3);
  CHECK(ds.set_size(3) == 1);
  CHECK(ds.find(0) == ds.find(2));
  CHECK(ds.find(3) != ds.find(4));
  CHECK(ds.element_count() == 5);
}

TEST_CASE("components matches an independent DFS oracle") {
  SplitMix64 engine(2024);
  for (int rep = 0; rep < 300; ++rep) {
    std::uint32_t n = 1 + static_cast<std::uint32_t>(engine.next_below(32));
    std::vector<Edge> edges = random_edges(n, engine);
    Partition part = components(n, edges);
    std::vector<std::uint32_t> oracle = dfs_labels(n, edges);
    CHECK(same_partition(part.component_id, oracle));
    std::uint32_t oracle_count =
        *std::max_element(oracle.begin(), oracle.end()) + 1;
    CHECK(part.component_count == oracle_count);
    // Size census agrees.
    std::vector<std::uint32_t> sizes(part.component_count, 0);
    for (std::uint32_t v = 0; v < n; ++v) ++sizes[part.component_id[v]];
    CHECK(sizes == part.component_sizes);
  }
  CHECK_THROWS_AS(components(3, std::vector<Edge>{{0, 3}}), VertexOutOfRange);
}

TEST_CASE("spanning_forest invariants") {
  SplitMix64 engine(77);
  for (int rep = 0; rep < 100; ++rep) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(engine.next_below(30));
    std::vector<Edge> edges = random_edges(n, engine);
    Forest f = spanning_forest(n, edges);
    CHECK(std::is_sorted(f.edges.begin(), f.edges.end()));
    // Forest edges come from the input.
    std::set<Edge> pool(edges.begin(), edges.end());
    for (const Edge& e : f.edges) CHECK(pool.count(e) == 1);
    // Same partition as the full edge set, with the tree edge count.
    Partition full = components(n, edges);
    Partition reduced = components(n, f.edges);
    CHECK(same_partition(full.component_id, reduced.component_id));
    CHECK(f.edges.size() == n - full.component_count);
  }
}

TEST_CASE("inter-component edge census") {
  Graph g = gen_two_cliques_matching(12, 2);
  // Partition by halves: exactly the 6 matching edges cross.
  Partition halves;
  halves.component_id.assign(12, 0);
  for (std::uint32_t v = 6; v < 12; ++v) halves.component_id[v] = 1;
  halves.component_count = 2;
  halves.component_sizes = {6, 6};
  std::vector<Edge> crossing = inter_component_edges(g, halves);
  CHECK(crossing.size() == 6);
  CHECK(inter_component_count(g, halves) == 6);
  for (const Edge& e : crossing) CHECK(e.v == e.u + 6);
  // One-class partition: nothing crosses.
  Partition whole = components(g);
  CHECK(inter_component_count(g, whole) == 0);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(gen_complete(5)));
  CHECK(is_connected(Graph(1, std::vector<Edge>{})));
  CHECK(is_connected(Graph(0, std::vector<Edge>{})));
  CHECK_FALSE(is_connected(Graph(2, std::vector<Edge>{})));
}

TEST_CASE("edge connectivity matches a bipartition oracle") {
  CHECK(brute_force_edge_connectivity(gen_complete(4)) == 3);
  CHECK(brute_force_edge_connectivity(gen_circulant(5, 1)) == 2);
  Graph path(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(brute_force_edge_connectivity(path) == 1);
  CHECK(brute_force_edge_connectivity(Graph(3, std::vector<Edge>{{0, 1}})) == 0);

  // Independent oracle: direct min over all 2^(n-1)-1 proper cuts.
  SplitMix64 engine(31337);
  for (int rep = 0; rep < 60; ++rep) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(engine.next_below(7));
    std::vector<Edge> edges = random_edges(n, engine);
    Graph g(n, edges);
    std::uint32_t oracle = 0xffffffffu;
    for (std::uint32_t subset = 1; subset + 1 < (1u << n); subset += 2) {
      // subset always contains vertex 0 (odd masks), never everything.
      std::uint32_t cut = 0;
      for (const Edge& e : g.edges()) {
        cut += ((subset >> e.u) & 1u) != ((subset >> e.v) & 1u);
      }
      oracle = std::min(oracle, cut);
    }
    CHECK(brute_force_edge_connectivity(g) == oracle);
  }
  CHECK_THROWS_AS(brute_force_edge_connectivity(gen_complete(13)),
                  TooLargeForBruteForce);
  CHECK_THROWS_AS(brute_force_edge_connectivity(Graph(1, std::vector<Edge>{})),
                  BadParameters);
}
