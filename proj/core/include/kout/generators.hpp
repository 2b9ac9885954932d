#pragma once

#include <cstdint>

#include "kout/graph.hpp"

namespace kout {

/** Internal-tree layout for gen_leafy_tree. */
enum class TreeShape { path, star, random };

/** Complete graph K_n. */
Graph gen_complete(std::uint32_t n);

/**
 * Two cliques on {0..n/2-1} and {n/2..n-1} joined by the matching
 * (i, n/2+i) for i = 0..n/k-1.  Requires n even, k | n, n >= 3k, and a
 * matching that fits inside the cliques (k >= 2).
 */
Graph gen_two_cliques_matching(std::uint32_t n, std::uint32_t k);

/**
 * A tree on t = n/(2k) internal vertices (ids 0..t-1, shaped per
 * tree_shape), where each internal vertex carries 2k-1 pendant leaves.
 * Total vertex count is exactly n and every internal degree is >= 2k.
 * The seed only matters for TreeShape::random.
 */
Graph gen_leafy_tree(std::uint32_t n, std::uint32_t k, TreeShape tree_shape,
                     std::uint64_t seed = 0);

/**
 * One clique of size n/2 plus 8k disjoint cliques of size n/(16k).
 * Requires 16k | n and n/(16k) >= 2; the result has m >= n^2/8 edges.
 */
Graph gen_clique_plus_small_cliques(std::uint32_t n, std::uint32_t k);

/** Circulant graph: i adjacent to i+-1..i+-d (mod n); 2d-regular and
 *  2d-edge-connected.  Requires 1 <= d < n/2. */
Graph gen_circulant(std::uint32_t n, std::uint32_t d);

/** Erdos-Renyi G(n, p): every pair independently with probability p. */
Graph gen_gnp(std::uint32_t n, double p, std::uint64_t seed);

/** Random simple r-regular graph via the pairing model with rejection,
 *  capped at 1000 attempts (throws GenerationFailed past the cap).
 *  Requires n*r even and r < n.  Practical only for small r: the pairing
 *  model's acceptance probability decays like exp(-r^2/4). */
Graph gen_random_regular(std::uint32_t n, std::uint32_t r, std::uint64_t seed);

/**
 * Random graph with every degree guaranteed to lie in [r, 2r]: a circulant
 * core of degree 2*ceil(r/2) plus roughly n*r/4 random chords, each added
 * only while both endpoints stay at degree < 2r.  This is the workhorse
 * family for experiments that need "almost regular" inputs at degrees where
 * the pairing model's rejection rate is hopeless.  Requires r >= 2 and
 * n > 2*ceil(r/2) + 1.
 */
Graph gen_near_regular(std::uint32_t n, std::uint32_t r, std::uint64_t seed);

}  // namespace kout
