#include "kout/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace kout {

DisjointSets::DisjointSets(std::uint32_t n) : parent_(n), size_(n, 1), sets_(n) {
  for (std::uint32_t i = 0; i < n; ++i) parent_[i] = i;
}

std::uint32_t DisjointSets::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::uint32_t x, std::uint32_t y) {
  std::uint32_t rx = find(x);
  std::uint32_t ry = find(y);
  if (rx == ry) return false;
  if (size_[rx] < size_[ry]) std::swap(rx, ry);
  parent_[ry] = rx;
  size_[rx] += size_[ry];
  --sets_;
  return true;
}

std::uint32_t DisjointSets::set_size(std::uint32_t x) { return size_[find(x)]; }

Partition components(std::uint32_t n, std::span<const Edge> edges) {
  DisjointSets ds(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw VertexOutOfRange("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                             " not in [0, " + std::to_string(n) + ")");
    }
    ds.unite(e.u, e.v);
  }
  Partition part;
  part.component_id.assign(n, 0);
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label_of_root(n, kUnset);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t root = ds.find(v);
    if (label_of_root[root] == kUnset) {
      label_of_root[root] = part.component_count++;
      part.component_sizes.push_back(0);
    }
    part.component_id[v] = label_of_root[root];
    ++part.component_sizes[label_of_root[root]];
  }
  return part;
}

Partition components(const Graph& g) { return components(g.vertex_count(), g.edges()); }

Forest spanning_forest(std::uint32_t n, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  DisjointSets ds(n);
  Forest forest;
  for (const Edge& e : sorted) {
    if (e.u >= n || e.v >= n) {
      throw VertexOutOfRange("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                             " not in [0, " + std::to_string(n) + ")");
    }
    if (ds.unite(e.u, e.v)) forest.edges.push_back(e);
  }
  return forest;
}

std::vector<Edge> inter_component_edges(const Graph& g, const Partition& partition) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (partition.component_id[e.u] != partition.component_id[e.v]) out.push_back(e);
  }
  return out;
}

std::uint64_t inter_component_count(const Graph& g, const Partition& partition) {
  std::uint64_t count = 0;
  for (const Edge& e : g.edges()) {
    count += partition.component_id[e.u] != partition.component_id[e.v];
  }
  return count;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return components(g).component_count == 1;
}

std::uint32_t brute_force_edge_connectivity(const Graph& g) {
  std::uint32_t n = g.vertex_count();
  if (n < 2) throw BadParameters("edge connectivity needs at least 2 vertices");
  if (n > 12) {
    throw TooLargeForBruteForce("bipartition enumeration capped at n <= 12, got n = " +
                                std::to_string(n));
  }
  // Fix vertex 0 on one side so each bipartition is counted once.
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t masks = 1u << (n - 1);
  for (std::uint32_t m = 1; m < masks; ++m) {
    std::uint32_t side = m << 1;  // vertex 0 stays on side "0"
    std::uint32_t crossing = 0;
    for (const Edge& e : g.edges()) {
      crossing += ((side >> e.u) & 1u) != ((side >> e.v) & 1u);
    }
    best = std::min(best, crossing);
  }
  return best;
}

}  // namespace kout
