#include "kout/generators.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "kout/rng.hpp"

namespace kout {

namespace {

void add_clique(std::vector<Edge>& edges, std::uint32_t lo, std::uint32_t hi) {
  for (std::uint32_t u = lo; u < hi; ++u) {
    for (std::uint32_t v = u + 1; v < hi; ++v) edges.push_back({u, v});
  }
}

}  // namespace

Graph gen_complete(std::uint32_t n) {
  std::vector<Edge> edges;
  edges.reserve(n == 0 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  }
  return Graph(n, edges);
}

Graph gen_two_cliques_matching(std::uint32_t n, std::uint32_t k) {
  if (k == 0 || n % 2 != 0 || n % k != 0 || n < 3 * k) {
    throw BadParameters("two_cliques_matching requires n even, k | n, n >= 3k");
  }
  std::uint32_t matching = n / k;
  if (matching > n / 2) {
    throw BadParameters("two_cliques_matching: matching of n/k edges needs k >= 2");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n / 2) * (n / 2 - 1) + matching);
  add_clique(edges, 0, n / 2);
  add_clique(edges, n / 2, n);
  for (std::uint32_t i = 0; i < matching; ++i) edges.push_back({i, n / 2 + i});
  return Graph(n, edges);
}

Graph gen_leafy_tree(std::uint32_t n, std::uint32_t k, TreeShape tree_shape,
                     std::uint64_t seed) {
  if (k == 0 || n % (2 * k) != 0 || n / (2 * k) < 2) {
    throw BadParameters("leafy_tree requires 2k | n and n/(2k) >= 2");
  }
  std::uint32_t t = n / (2 * k);          // internal vertices 0..t-1
  std::uint32_t leaves_each = 2 * k - 1;  // pendant leaves per internal vertex
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(t) - 1 + static_cast<std::size_t>(t) * leaves_each);
  switch (tree_shape) {
    case TreeShape::path:
      for (std::uint32_t i = 0; i + 1 < t; ++i) edges.push_back({i, i + 1});
      break;
    case TreeShape::star:
      for (std::uint32_t i = 1; i < t; ++i) edges.push_back({0, i});
      break;
    case TreeShape::random: {
      SplitMix64 rng(mix64(seed, 0x1eafULL));
      for (std::uint32_t i = 1; i < t; ++i) {
        std::uint32_t parent = rng.next_below(i);
        edges.push_back({parent, i});
      }
      break;
    }
  }
  for (std::uint32_t i = 0; i < t; ++i) {
    std::uint32_t base = t + i * leaves_each;
    for (std::uint32_t j = 0; j < leaves_each; ++j) edges.push_back({i, base + j});
  }
  return Graph(n, edges);
}

Graph gen_clique_plus_small_cliques(std::uint32_t n, std::uint32_t k) {
  if (k == 0 || n % (16 * k) != 0 || n / (16 * k) < 2) {
    throw BadParameters("clique_plus_small_cliques requires 16k | n and n/(16k) >= 2");
  }
  std::uint32_t small = n / (16 * k);  // size of each of the 8k small cliques
  std::vector<Edge> edges;
  add_clique(edges, 0, n / 2);
  for (std::uint32_t c = 0; c < 8 * k; ++c) {
    std::uint32_t lo = n / 2 + c * small;
    add_clique(edges, lo, lo + small);
  }
  return Graph(n, edges);
}

Graph gen_circulant(std::uint32_t n, std::uint32_t d) {
  if (d < 1 || 2 * d >= n) throw BadParameters("circulant requires 1 <= d < n/2");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * d);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 1; j <= d; ++j) {
      edges.push_back(make_edge(i, (i + j) % n));
    }
  }
  return Graph(n, edges);
}

Graph gen_gnp(std::uint32_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw BadParameters("gnp requires 0 <= p <= 1");
  SplitMix64 rng(mix64(seed, 0x6e70ULL));
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (rng.next_double() < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph gen_random_regular(std::uint32_t n, std::uint32_t r, std::uint64_t seed) {
  if (r >= n || (static_cast<std::uint64_t>(n) * r) % 2 != 0) {
    throw BadParameters("random_regular requires n*r even and r < n");
  }
  if (r == 0) return Graph(n, std::vector<Edge>{});
  SplitMix64 rng(mix64(seed, 0x4e67ULL));
  std::vector<VertexId> stubs(static_cast<std::size_t>(n) * r);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::uint32_t v = 0; v < n; ++v) {
      for (std::uint32_t j = 0; j < r; ++j) stubs[static_cast<std::size_t>(v) * r + j] = v;
    }
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::size_t j = rng.next_below(static_cast<std::uint32_t>(i));
      std::swap(stubs[i - 1], stubs[j]);
    }
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        ok = false;  // self-loop: reject the whole pairing
      } else {
        edges.push_back(make_edge(stubs[i], stubs[i + 1]));
      }
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, edges);
  }
  throw GenerationFailed("random_regular: no simple pairing in " +
                         std::to_string(kMaxAttempts) + " attempts (n=" +
                         std::to_string(n) + ", r=" + std::to_string(r) + ")");
}

Graph gen_near_regular(std::uint32_t n, std::uint32_t r, std::uint64_t seed) {
  std::uint32_t d0 = (r + 1) / 2;  // circulant half-width; core degree 2*d0
  if (r < 2 || 2 * d0 >= n) {
    throw BadParameters("near_regular requires r >= 2 and n > 2*ceil(r/2) + 1");
  }
  Graph core = gen_circulant(n, d0);
  std::set<Edge> edge_set(core.edges().begin(), core.edges().end());
  std::vector<std::uint32_t> deg(n, 2 * d0);
  SplitMix64 rng(mix64(seed, 0x2e67ULL));
  std::uint64_t want = static_cast<std::uint64_t>(n) * r / 4;
  std::uint64_t attempts = 4 * want;
  for (std::uint64_t added = 0, tries = 0; added < want && tries < attempts; ++tries) {
    std::uint32_t u = rng.next_below(n);
    std::uint32_t v = rng.next_below(n);
    if (u == v || deg[u] >= 2 * r || deg[v] >= 2 * r) continue;
    Edge e = make_edge(u, v);
    if (!edge_set.insert(e).second) continue;
    ++deg[u];
    ++deg[v];
    ++added;
  }
  std::vector<Edge> edges(edge_set.begin(), edge_set.end());
  return Graph(n, edges);
}

}  // namespace kout
