#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kout/graph.hpp"

namespace kout {

/** Union-find with path halving and union by size. */
class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n);

  std::uint32_t find(std::uint32_t x);
  /** Returns true when x and y were in different sets (a merge happened). */
  bool unite(std::uint32_t x, std::uint32_t y);
  std::uint32_t set_size(std::uint32_t x);
  std::uint32_t set_count() const { return sets_; }
  std::uint32_t element_count() const { return static_cast<std::uint32_t>(parent_.size()); }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::uint32_t sets_;
};

/** Vertex partition into connected components with dense labels.  Labels
 *  are assigned by first occurrence in vertex order, so they are
 *  deterministic for a given edge set. */
struct Partition {
  std::vector<std::uint32_t> component_id;     // size n
  std::vector<std::uint32_t> component_sizes;  // size component_count
  std::uint32_t component_count = 0;
};

Partition components(std::uint32_t n, std::span<const Edge> edges);
Partition components(const Graph& g);

/** A forest as a sorted canonical edge list. */
struct Forest {
  std::vector<Edge> edges;
  friend bool operator==(const Forest&, const Forest&) = default;
};

/** Kruskal-style spanning forest: edges are visited in sorted canonical
 *  order (ties in the input collapse), keeping each edge that joins two
 *  components.  Deterministic for a given edge set. */
Forest spanning_forest(std::uint32_t n, std::span<const Edge> edges);

/** Edges of g whose endpoints lie in different blocks of the partition. */
std::vector<Edge> inter_component_edges(const Graph& g, const Partition& partition);

/** Count-only fast path of inter_component_edges. */
std::uint64_t inter_component_count(const Graph& g, const Partition& partition);

bool is_connected(const Graph& g);

/** Minimum over all vertex bipartitions of the crossing-edge count, by
 *  exhaustive enumeration (2^(n-1) - 1 bipartitions).  Capped at n <= 12;
 *  larger inputs throw TooLargeForBruteForce.  Requires n >= 2. */
std::uint32_t brute_force_edge_connectivity(const Graph& g);

}  // namespace kout
