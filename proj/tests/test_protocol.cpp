#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "kout/connectivity.hpp"
#include "kout/errors.hpp"
#include "kout/generators.hpp"
#include "kout/graph.hpp"
#include "kout/naming.hpp"
#include "kout/protocol.hpp"
#include "kout/rng.hpp"
#include "kout/sampling.hpp"

using namespace kout;

namespace {

// Two K_6 halves {0..5} / {6..11} with the partial matching
// (0,6), (1,7), (2,8).  Connected; the matching is a 3-edge cut.
Graph cliques_with_cut3() {
  std::vector<Edge> edges;
  for (std::uint32_t base : {0u, 6u}) {
    for (std::uint32_t u = base; u < base + 6; ++u) {
      for (std::uint32_t v = u + 1; v < base + 6; ++v) {
        edges.push_back(Edge{u, v});
      }
    }
  }
  for (std::uint32_t i = 0; i < 3; ++i) edges.push_back(Edge{i, i + 6});
  return Graph(12, edges);
}

// Messages whose samples stay inside the sender's half while the sketches
// are honest, so the referee's only route across is the syndrome decode.
std::vector<VertexMessage> half_blind_messages(const Graph& g,
                                               const NamingScheme& scheme) {
  std::vector<VertexMessage> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexMessage m;
    m.sender = v;
    for (VertexId w : g.neighbors(v)) {
      if ((v < 6) == (w < 6)) m.sampled_edges.push_back(make_edge(v, w));
    }
    std::sort(m.sampled_edges.begin(), m.sampled_edges.end());
    m.sketch = vertex_sketch(g, scheme, v);
    m.bit_count = m.sampled_edges.size() * 2ull * id_bits(g.vertex_count()) +
                  scheme.name_bits();
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("id_bits") {
  CHECK(id_bits(0) == 1);
  CHECK(id_bits(1) == 1);
  CHECK(id_bits(2) == 1);
  CHECK(id_bits(3) == 2);
  CHECK(id_bits(4) == 2);
  CHECK(id_bits(5) == 3);
  CHECK(id_bits(1024) == 10);
  CHECK(id_bits(1025) == 11);
}

TEST_CASE("make_message contents and accounting") {
  Graph g = gen_gnp(16, 0.4, 12);
  auto scheme = bch_names(16, 2);
  RngStream stream{5, 0};
  VertexMessage m = make_message(g, 3, 2, *scheme, stream.substream(3));
  CHECK(m.sender == 3);
  CHECK(m.sampled_edges.size() == std::min<std::uint32_t>(2, g.degree(3)));
  CHECK(std::is_sorted(m.sampled_edges.begin(), m.sampled_edges.end()));
  for (const Edge& e : m.sampled_edges) {
    CHECK(g.has_edge(e));
    CHECK((e.u == 3 || e.v == 3));
  }
  CHECK(m.sketch == vertex_sketch(g, *scheme, 3));
  CHECK(m.bit_count ==
        m.sampled_edges.size() * 2 * id_bits(16) + scheme->name_bits());

  auto wrong = bch_names(17, 2);
  CHECK_THROWS_AS(make_message(g, 3, 2, *wrong, stream.substream(3)),
                  SchemeMismatch);
}

TEST_CASE("message union replays the library sampler seed for seed") {
  Graph g = gen_gnp(30, 0.3, 44);
  auto scheme = bch_names(30, 2);
  const std::uint64_t seed = 909;
  RngStream rng{seed, 0};
  std::set<Edge> uni;
  for (VertexId v = 0; v < 30; ++v) {
    VertexMessage m = make_message(g, v, 3, *scheme, rng.substream(v));
    uni.insert(m.sampled_edges.begin(), m.sampled_edges.end());
  }
  EdgeSample s = k_out_sample(g, 3, RngStream{seed, 0});
  CHECK(std::vector<Edge>(uni.begin(), uni.end()) == s.edges);
}

TEST_CASE("fully sampled path: success without any decoding") {
  Graph p4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    // k = 2 >= max degree, so the union is the whole path and every
    // component fold is zero immediately.
    ProtocolOutcome out = run_protocol(p4, 2, 1, SchemeKind::bch, seed);
    CHECK(out.success);
    CHECK(out.decode_failures == 0);
    CHECK(out.rounds_used == 1);
    CHECK(out.forest.edges == p4.edges());
    CHECK(verify_forest(p4, out));
    // C(4,2) = 6 fits in GF(2^3), so names are r*m = 3 bits; senders ship
    // min(k, deg) edge ids of 2*id_bits(4) = 4 bits each.
    CHECK(out.max_bits == 2 * 4 + 3);
    CHECK(out.mean_bits == doctest::Approx((4 + 8 + 8 + 4) / 4.0 + 3));
  }
}

TEST_CASE("edgeless graph: every singleton is already final") {
  Graph g(5, std::vector<Edge>{});
  ProtocolOutcome out = run_protocol(g, 3, 1, SchemeKind::bch, 7);
  CHECK(out.success);
  CHECK(out.forest.edges.empty());
  CHECK(out.decode_failures == 0);
  CHECK(verify_forest(g, out));
}

TEST_CASE("unsampled bridge is recovered through the sketch") {
  // Two triangles joined by the bridge (2,3).  With k = 2 both bridge
  // endpoints leave it out of their picks for a fair share of seeds; the
  // referee must then infer it from the cut syndrome.
  Graph g(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
                               {4, 5}, {2, 3}});
  std::uint64_t seed = 0;
  bool found = false;
  for (; seed < 400; ++seed) {
    EdgeSample s = k_out_sample(g, 2, RngStream{seed, 0});
    if (!std::count(s.edges.begin(), s.edges.end(), Edge{2, 3})) {
      found = true;
      break;
    }
  }
  REQUIRE(found);
  ProtocolOutcome out = run_protocol(g, 2, 2, SchemeKind::bch, seed);
  CHECK(out.success);
  CHECK(out.decode_failures == 0);
  CHECK(out.forest.edges.size() == 5);
  CHECK(std::count(out.forest.edges.begin(), out.forest.edges.end(),
                   Edge{2, 3}) == 1);
  CHECK(verify_forest(g, out));
}

TEST_CASE("referee rejects malformed inputs") {
  Graph g = gen_complete(4);
  auto scheme = bch_names(4, 1);
  RngStream rng{1, 0};
  std::vector<VertexMessage> msgs;
  for (VertexId v = 0; v < 4; ++v) {
    msgs.push_back(make_message(g, v, 3, *scheme, rng.substream(v)));
  }

  std::vector<VertexMessage> missing(msgs.begin(), msgs.end() - 1);
  CHECK_THROWS_AS(referee(missing, *scheme, 4), MissingMessage);

  std::vector<VertexMessage> swapped = msgs;
  std::swap(swapped[0], swapped[1]);
  CHECK_THROWS_AS(referee(swapped, *scheme, 4), MissingMessage);

  auto other_n = bch_names(5, 1);
  CHECK_THROWS_AS(referee(msgs, *other_n, 4), SchemeMismatch);

  auto wider = bch_names(4, 1);
  // Same universe but sketches from a different-width scheme.
  auto wide_scheme = random_names(4, 1, 3);
  std::vector<VertexMessage> mixed = msgs;
  mixed[2].sketch = vertex_sketch(g, *wide_scheme, 2);
  CHECK_THROWS_AS(referee(mixed, *wider, 4), SchemeMismatch);
}

TEST_CASE("cut wider than the resilience budget cannot fake success") {
  Graph g = cliques_with_cut3();
  REQUIRE(is_connected(g));

  // Random names: the 3-edge cut syndrome has no <=2-subset preimage (the
  // 29-bit names would need an accidental collision), so the decode fails.
  // Both halves fold to the same syndrome and the cache counts it once.
  {
    auto scheme = random_names(12, 2, 2024);
    auto msgs = half_blind_messages(g, *scheme);
    ProtocolOutcome out = referee(msgs, *scheme, 12);
    CHECK_FALSE(out.success);
    CHECK(out.decode_failures == 1);
    // Best-effort forest: both halves internally spanned.
    CHECK(out.forest.edges.size() == 10);
    Partition part = components(12, out.forest.edges);
    CHECK(part.component_count == 2);
  }

  // Designed names: a syndrome of three errors is outside the designed
  // correction radius, so the decoder either rejects it or returns a
  // wrong small set; the ground-truth audit run_protocol applies must
  // leave the composite verdict false either way.
  {
    auto scheme = bch_names(12, 2);
    auto msgs = half_blind_messages(g, *scheme);
    ProtocolOutcome out = referee(msgs, *scheme, 12);
    if (out.success) out.success = verify_forest(g, out);
    CHECK_FALSE(out.success);
  }
}

TEST_CASE("verify_forest semantics") {
  Graph g = cliques_with_cut3();
  Forest good = spanning_forest(12, g.edges());
  CHECK(verify_forest(g, good));

  Forest phantom = good;
  phantom.edges.pop_back();
  phantom.edges.push_back(Edge{0, 7});  // not an edge of g
  CHECK_FALSE(verify_forest(g, phantom));

  Forest cyclic = good;
  // good spans the connected graph with 11 edges; any extra edge closes a
  // cycle.
  for (const Edge& e : g.edges()) {
    if (!std::count(cyclic.edges.begin(), cyclic.edges.end(), e)) {
      cyclic.edges.push_back(e);
      break;
    }
  }
  CHECK_FALSE(verify_forest(g, cyclic));

  Forest incomplete = good;
  incomplete.edges.pop_back();
  CHECK_FALSE(verify_forest(g, incomplete));

  Forest out_of_range = good;
  out_of_range.edges.back() = Edge{3, 99};
  CHECK_FALSE(verify_forest(g, out_of_range));
}

TEST_CASE("clique round trips under both schemes") {
  Graph g = gen_complete(8);
  for (SchemeKind kind : {SchemeKind::bch, SchemeKind::random_names}) {
    for (std::uint64_t seed : {10, 11, 12}) {
      ProtocolOutcome out = run_protocol(g, 3, 2, kind, seed);
      CHECK(out.success);
      CHECK(verify_forest(g, out));
      CHECK(out.forest.edges.size() == 7);
    }
  }
}

TEST_CASE("alt protocol parameters") {
  CHECK(alt_rounds(16) == 4);
  CHECK(alt_rounds(1024) == 10);
  CHECK(alt_resilience(16, 2.0) == 32);
  CHECK(alt_resilience(1024, 2.0) == 640);
  Graph g = gen_complete(4);
  CHECK_THROWS_AS(alt_protocol(g, 1.5, 1), BadParameters);
}

TEST_CASE("alt protocol on an edgeless graph finishes before round one") {
  Graph g(4, std::vector<Edge>{});
  ProtocolOutcome out = alt_protocol(g, 2.0, 9);
  CHECK(out.success);
  CHECK(out.rounds_used == 0);
  CHECK(out.forest.edges.empty());
}

TEST_CASE("alt protocol spans small two-clique graphs") {
  Graph g = gen_two_cliques_matching(16, 2);
  for (std::uint64_t seed : {1, 2, 3}) {
    ProtocolOutcome out = alt_protocol(g, 2.0, seed);
    CHECK(out.success);
    CHECK(out.rounds_used <= alt_rounds(16));
    CHECK(verify_forest(g, out));
    CHECK(out.forest.edges.size() == 15);
  }
}

TEST_CASE("alt protocol on a moderate random graph") {
  Graph g = gen_gnp(24, 0.35, 5);
  REQUIRE(is_connected(g));
  ProtocolOutcome out = alt_protocol(g, 2.0, 77);
  CHECK(out.success);
  CHECK(verify_forest(g, out));
  CHECK(out.max_bits > 0);
  CHECK(out.mean_bits > 0);
}
