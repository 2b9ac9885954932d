#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "kout/errors.hpp"

namespace kout {

using VertexId = std::uint32_t;

/** Undirected edge in canonical form: u < v. */
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/** Canonicalize an endpoint pair; throws SelfLoop when a == b. */
inline Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw SelfLoop("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

/**
 * Immutable simple undirected graph on vertices 0..n-1.  Edges are stored
 * canonically sorted and deduplicated; adjacency lists are sorted.  All
 * sampling and experiment code shares one Graph per configuration cell, so
 * the type is safe to read from many threads at once.
 */
class Graph {
 public:
  /** Builds a graph from any iterable of endpoint pairs; duplicates (in
   *  either orientation) collapse.  Throws SelfLoop / VertexOutOfRange. */
  Graph(std::uint32_t n, std::span<const Edge> edges);
  Graph(std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& endpoint_pairs);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return static_cast<std::uint64_t>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const;
  std::uint32_t degree(VertexId v) const;
  std::uint32_t max_degree() const;
  bool has_edge(Edge e) const;

 private:
  void build(std::vector<Edge>&& edges);

  std::uint32_t n_;
  std::vector<Edge> edges_;
  std::vector<VertexId> adj_flat_;      // concatenated sorted neighbor lists
  std::vector<std::uint64_t> adj_off_;  // n_+1 offsets into adj_flat_
};

}  // namespace kout
