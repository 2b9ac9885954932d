#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kout/bitstring.hpp"
#include "kout/graph.hpp"

namespace kout {

enum class SchemeKind { random_names, bch };

/**
 * Assigns every potential edge of K_n a fixed name of ell bits such that no
 * nonempty XOR of at most 2r names is zero (r-resilience).  Consequently
 * the XOR of any edge set of size at most r determines the set uniquely,
 * and decode() can invert it.  Names are recomputed on demand from a small
 * descriptor; nothing of size C(n,2)*ell is ever materialized.
 */
class NamingScheme {
 public:
  virtual ~NamingScheme() = default;

  std::uint32_t universe_n() const { return n_; }
  std::uint32_t resilience() const { return r_; }
  std::uint32_t name_bits() const { return ell_; }
  SchemeKind kind() const { return kind_; }

  /** Number of potential edges, C(n,2). */
  std::uint64_t universe_edge_count() const {
    return static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
  }

  /** 1-based index of edge {u,v} (u < v) in the K_n universe:
   *  u*n - u(u+1)/2 + (v-u).  Index 0 is reserved. */
  std::uint64_t edge_index(Edge e) const;

  /** Inverse of edge_index. */
  Edge edge_at(std::uint64_t index) const;

  virtual BitString name(Edge e) const = 0;

  /**
   * Finds the unique edge set S with |S| <= weight_cap and XOR of names
   * equal to the syndrome, or nullopt when no such set exists or the
   * search is out of reach (decode failure is an expected outcome, not an
   * error).  weight_cap must be in [1, r].
   */
  virtual std::optional<std::vector<Edge>> decode(const BitString& syndrome,
                                                  std::uint32_t weight_cap) const = 0;

  /** Compact one-line serialization of the scheme parameters. */
  virtual std::string descriptor() const = 0;

 protected:
  NamingScheme(std::uint32_t n, std::uint32_t r, std::uint32_t ell, SchemeKind kind);
  void check_edge(Edge e) const;
  void check_decode_args(const BitString& syndrome, std::uint32_t weight_cap) const;

  std::uint32_t n_;
  std::uint32_t r_;
  std::uint32_t ell_;
  SchemeKind kind_;
};

/** Uniformly random names of ell = ceil(4 * r * log2 n) bits, derived
 *  deterministically from the seed.  Resilient with high probability;
 *  decoding falls back to meet-in-the-middle subset search and is only
 *  feasible at desk scale (universe <= 2000 potential edges, weight <= 6,
 *  and an enumeration budget). */
std::unique_ptr<NamingScheme> random_names(std::uint32_t n, std::uint32_t r,
                                           std::uint64_t seed);

/** Deterministic names from BCH parity-check columns: the edge with index
 *  i gets the concatenated binary expansions of alpha^i, alpha^(3i), ...,
 *  alpha^((2r-1)i) over GF(2^m), where m is the smallest supported degree
 *  with C(n,2) <= 2^m - 1.  ell = r*m, and any 2r names are linearly
 *  independent (designed distance 2r+1), i.e. exactly r-resilient.
 *  Decoding is syndrome decoding: Berlekamp-Massey plus a Chien-style scan
 *  over the edge universe.  Throws FieldTooSmall when C(n,2) > 2^24 - 1. */
std::unique_ptr<NamingScheme> bch_names(std::uint32_t n, std::uint32_t r);

/** Builds a scheme by kind; the seed matters only for random_names. */
std::unique_ptr<NamingScheme> make_scheme(SchemeKind kind, std::uint32_t n,
                                          std::uint32_t r, std::uint64_t seed);

const char* to_string(SchemeKind kind);

/** XOR of the names of an edge set (the empty set folds to zero). */
BitString xor_names(const NamingScheme& scheme, std::span<const Edge> edges);

/** XOR of the names of all edges incident to v in g.  By the telescoping
 *  property, XOR-ing vertex sketches over any vertex set C yields exactly
 *  the XOR over the cut edges between C and its complement. */
BitString vertex_sketch(const Graph& g, const NamingScheme& scheme, VertexId v);

}  // namespace kout
