#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "kout/bitstring.hpp"
#include "kout/connectivity.hpp"
#include "kout/graph.hpp"
#include "kout/naming.hpp"
#include "kout/rng.hpp"

namespace kout {

/** Width of one vertex id on the wire: ceil(log2 n) bits (and 1 for n <= 1).
 *  An edge is transmitted as two such ids, uncompressed, so bit counts are
 *  exact and directly comparable across runs. */
inline std::uint32_t id_bits(std::uint32_t n) {
  return n <= 1 ? 1u : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

/** One vertex's one-shot transmission: its own k-out picks plus the XOR of
 *  the names of *all* its incident edges (so folding member sketches of any
 *  vertex set telescopes to the XOR over the cut). */
struct VertexMessage {
  VertexId sender = 0;
  std::vector<Edge> sampled_edges;  // canonical order, all incident to sender
  BitString sketch;
  std::uint64_t bit_count = 0;  // |sampled_edges| * 2 * id_bits(n) + ell
};

/** One vertex's transmission in the multi-round variant: one independent
 *  p-sample of its incident edges per round, plus the same sketch. */
struct AltVertexMessage {
  VertexId sender = 0;
  std::vector<std::vector<Edge>> sample_rounds;
  BitString sketch;
  std::uint64_t bit_count = 0;
};

struct ProtocolOutcome {
  Forest forest;
  bool success = false;
  std::uint64_t decode_failures = 0;
  std::uint64_t max_bits = 0;   // largest single message, in bits
  double mean_bits = 0.0;       // average message size, in bits
  std::uint32_t rounds_used = 0;
};

/** Builds vertex v's message: k-out picks drawn from rng (prefix-compatible
 *  with k_out_sample when rng is that sample's substream(v)) and the vertex
 *  sketch.  The scheme universe must match |V(g)| exactly. */
VertexMessage make_message(const Graph& g, VertexId v, std::uint32_t k,
                           const NamingScheme& scheme, const RngStream& rng);

/**
 * Reconstructs a spanning forest from the n messages alone: seeds a forest
 * with the union of the sampled edges, then repeatedly folds component
 * sketches, finalizes components whose fold is zero, and decodes the rest
 * smallest-first, merging along decoded cut edges (one edge per merge
 * opportunity, canonical order) until everything is final or no wave makes
 * progress.  Never sees the graph; decoded edges are trusted up to the
 * scheme's resilience.  success is true only when every component folded to
 * zero and no decode failed.
 */
ProtocolOutcome referee(std::span<const VertexMessage> messages,
                        const NamingScheme& scheme, std::uint32_t n);

/** End-to-end one-shot run: builds the scheme, draws every vertex's message
 *  from its private substream, runs the referee, and downgrades success if
 *  the result fails the ground-truth audit (verify_forest). */
ProtocolOutcome run_protocol(const Graph& g, std::uint32_t k, std::uint32_t r,
                             SchemeKind kind, std::uint64_t master_seed);

/** Round budget of the multi-round variant: ceil(log2 n). */
inline std::uint32_t alt_rounds(std::uint32_t n) { return id_bits(n); }

/** Sketch resilience the multi-round variant provisions: the decoder must
 *  survive cuts of up to sqrt(n) * log2(n) edges with constant c slack. */
std::uint32_t alt_resilience(std::uint32_t n, double c);

/**
 * Multi-round variant: every vertex sends ceil(log2 n) independent
 * p-samples of its incident edges at rate c/sqrt(n) plus a sketch with
 * resilience alt_resilience(n, c).  Round i consumes sample i:
 * components are scanned smallest-first; one with an outgoing round-i edge
 * merges along the lowest canonical such edge, one without has its fold
 * decoded (cap ceil(sqrt(n) * ceil(log2 n))) or is declared final at zero.
 * Requires c >= 2.
 */
ProtocolOutcome alt_protocol(const Graph& g, double c, std::uint64_t master_seed);

/** Ground-truth audit: forest is a subset of E(g), acyclic, and induces
 *  exactly the connected components of g. */
bool verify_forest(const Graph& g, const Forest& forest);
bool verify_forest(const Graph& g, const ProtocolOutcome& outcome);

}  // namespace kout
