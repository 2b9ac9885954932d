#pragma once

#include <cstdint>
#include <vector>

#include "kout/graph.hpp"
#include "kout/rng.hpp"

namespace kout {

enum class SampleModel { k_out, expected_k_out, p_sample };

/**
 * A sampled subgraph plus, per edge, which endpoints chose it.
 * chooser[i] is a 2-bit mask parallel to edges[i]: bit 0 set when the
 * smaller endpoint picked the edge, bit 1 when the larger one did.  Every
 * sampled edge has at least one bit set, which doubles as a k-degeneracy
 * witness: orienting each edge away from a choosing endpoint bounds every
 * out-degree by that vertex's pick budget.
 */
struct EdgeSample {
  std::vector<Edge> edges;           // canonical, sorted
  std::vector<std::uint8_t> chooser; // parallel to edges
  SampleModel model = SampleModel::k_out;
  double param = 0.0;                // k for the *_k_out models, p otherwise
};

/**
 * The neighbors vertex v picks under k-out sampling: a uniformly random
 * min(k, deg(v))-subset of its adjacency list, realized as the prefix of a
 * partial Fisher-Yates shuffle.  Consuming draws in prefix order makes the
 * picks for budget k a subset of the picks for any k' > k on the same
 * engine, which is what gives nested samples their monotonicity.
 */
std::vector<VertexId> k_out_picks(const Graph& g, VertexId v, std::uint32_t k,
                                  SplitMix64& engine);

/** Each vertex independently picks min(k, deg) incident edges; an edge is
 *  sampled iff at least one endpoint picked it.  Vertex v draws from
 *  rng.substream(v), so per-vertex draws are independent and a vertex's
 *  picks can be recomputed in isolation (the protocol modules rely on it). */
EdgeSample k_out_sample(const Graph& g, std::uint32_t k, const RngStream& rng);

/** Each vertex samples each incident edge independently with probability
 *  k/max(k, deg(v)); an edge is sampled iff at least one side sampled it. */
EdgeSample expected_k_out_sample(const Graph& g, std::uint32_t k, const RngStream& rng);

/** Classic percolation: each edge independently with probability p.  Both
 *  chooser bits are set on every sampled edge. */
EdgeSample p_sample(const Graph& g, double p, const RngStream& rng);

/** Inclusion probability of edge e under expected k-out sampling:
 *  1 when min(deg(u), deg(v)) <= k, else k/du + k/dv - k^2/(du*dv). */
double edge_inclusion_prob(const Graph& g, std::uint32_t k, Edge e);

}  // namespace kout
