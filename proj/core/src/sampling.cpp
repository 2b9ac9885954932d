#include "kout/sampling.hpp"

#include <algorithm>
#include <utility>

namespace kout {

namespace {

/** Fold directed picks (edge, chooser-bit) into a sorted deduplicated
 *  EdgeSample, OR-ing chooser bits of both endpoints. */
EdgeSample assemble(std::vector<std::pair<Edge, std::uint8_t>>&& picks, SampleModel model,
                    double param) {
  std::sort(picks.begin(), picks.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  EdgeSample s;
  s.model = model;
  s.param = param;
  s.edges.reserve(picks.size());
  s.chooser.reserve(picks.size());
  for (const auto& [e, bit] : picks) {
    if (!s.edges.empty() && s.edges.back() == e) {
      s.chooser.back() |= bit;
    } else {
      s.edges.push_back(e);
      s.chooser.push_back(bit);
    }
  }
  return s;
}

std::uint8_t chooser_bit(VertexId picker, Edge e) {
  return picker == e.u ? std::uint8_t{1} : std::uint8_t{2};
}

}  // namespace

std::vector<VertexId> k_out_picks(const Graph& g, VertexId v, std::uint32_t k,
                                  SplitMix64& engine) {
  auto nbrs = g.neighbors(v);
  std::uint32_t deg = static_cast<std::uint32_t>(nbrs.size());
  std::uint32_t take = std::min(k, deg);
  std::vector<VertexId> pool(nbrs.begin(), nbrs.end());
  for (std::uint32_t i = 0; i < take; ++i) {
    std::uint32_t j = i + engine.next_below(deg - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  return pool;
}

EdgeSample k_out_sample(const Graph& g, std::uint32_t k, const RngStream& rng) {
  std::vector<std::pair<Edge, std::uint8_t>> picks;
  picks.reserve(static_cast<std::size_t>(g.vertex_count()) * std::min<std::uint64_t>(k, 16));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    SplitMix64 engine = rng.substream(v).make_engine();
    for (VertexId w : k_out_picks(g, v, k, engine)) {
      Edge e = make_edge(v, w);
      picks.emplace_back(e, chooser_bit(v, e));
    }
  }
  return assemble(std::move(picks), SampleModel::k_out, static_cast<double>(k));
}

EdgeSample expected_k_out_sample(const Graph& g, std::uint32_t k, const RngStream& rng) {
  std::vector<std::pair<Edge, std::uint8_t>> picks;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    SplitMix64 engine = rng.substream(v).make_engine();
    std::uint32_t deg = g.degree(v);
    double prob = deg <= k ? 1.0 : static_cast<double>(k) / deg;
    for (VertexId w : g.neighbors(v)) {
      if (engine.next_double() < prob) {
        Edge e = make_edge(v, w);
        picks.emplace_back(e, chooser_bit(v, e));
      }
    }
  }
  return assemble(std::move(picks), SampleModel::expected_k_out, static_cast<double>(k));
}

EdgeSample p_sample(const Graph& g, double p, const RngStream& rng) {
  if (p < 0.0 || p > 1.0) throw BadParameters("p_sample requires 0 <= p <= 1");
  SplitMix64 engine = rng.substream(0x9e).make_engine();
  EdgeSample s;
  s.model = SampleModel::p_sample;
  s.param = p;
  for (const Edge& e : g.edges()) {
    if (engine.next_double() < p) {
      s.edges.push_back(e);
      s.chooser.push_back(3);
    }
  }
  return s;
}

double edge_inclusion_prob(const Graph& g, std::uint32_t k, Edge e) {
  Edge canon = make_edge(e.u, e.v);
  if (!g.has_edge(canon)) {
    throw EdgeNotInGraph("edge (" + std::to_string(canon.u) + "," + std::to_string(canon.v) +
                         ") is not in the graph");
  }
  double du = g.degree(canon.u);
  double dv = g.degree(canon.v);
  if (std::min(du, dv) <= static_cast<double>(k)) return 1.0;
  double a = k / du;
  double b = k / dv;
  return a + b - a * b;
}

}  // namespace kout
