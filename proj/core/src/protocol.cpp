#include "kout/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "kout/errors.hpp"
#include "kout/sampling.hpp"

namespace kout {

namespace {

/** Decode cache.  Syndromes repeat (the two sides of a bridge fold to the
 *  same value, and stuck components resubmit theirs every wave) and decode
 *  is pure, so each distinct syndrome is decoded at most once per run and
 *  each distinct failing syndrome is counted once. */
class DecodeMemo {
 public:
  DecodeMemo(const NamingScheme& scheme, std::uint32_t weight_cap)
      : scheme_(scheme), cap_(weight_cap) {}

  const std::optional<std::vector<Edge>>& decode(const BitString& syndrome,
                                                 std::uint64_t& failures) {
    for (const auto& [syn, result] : entries_) {
      if (syn == syndrome) return result;
    }
    entries_.emplace_back(syndrome, scheme_.decode(syndrome, cap_));
    if (!entries_.back().second) ++failures;
    return entries_.back().second;
  }

 private:
  const NamingScheme& scheme_;
  std::uint32_t cap_;
  std::vector<std::pair<BitString, std::optional<std::vector<Edge>>>> entries_;
};

/** XOR of member sketches for every current component, indexed by root. */
template <typename Message>
std::vector<BitString> fold_components(DisjointSets& ds,
                                       std::span<const Message> messages,
                                       std::uint32_t ell) {
  std::vector<BitString> folded(messages.size());
  for (std::uint32_t v = 0; v < messages.size(); ++v) {
    std::uint32_t root = ds.find(v);
    if (folded[root].bit_count() == 0) folded[root] = BitString(ell);
    folded[root] ^= messages[v].sketch;
  }
  return folded;
}

template <typename Message>
void record_bits(std::span<const Message> messages, ProtocolOutcome& out) {
  std::uint64_t sum = 0;
  for (const Message& m : messages) {
    out.max_bits = std::max(out.max_bits, m.bit_count);
    sum += m.bit_count;
  }
  out.mean_bits =
      messages.empty() ? 0.0 : static_cast<double>(sum) / messages.size();
}

/** Non-final component roots, smallest component first (root id breaks
 *  ties), for the deterministic scan order both referees use. */
std::vector<std::uint32_t> pending_roots(DisjointSets& ds,
                                         const std::vector<BitString>& folded) {
  std::vector<std::uint32_t> roots;
  for (std::uint32_t v = 0; v < folded.size(); ++v) {
    if (ds.find(v) == v && !folded[v].is_zero()) roots.push_back(v);
  }
  std::sort(roots.begin(), roots.end(),
            [&ds](std::uint32_t a, std::uint32_t b) {
              std::uint32_t sa = ds.set_size(a);
              std::uint32_t sb = ds.set_size(b);
              return sa != sb ? sa < sb : a < b;
            });
  return roots;
}

}  // namespace

VertexMessage make_message(const Graph& g, VertexId v, std::uint32_t k,
                           const NamingScheme& scheme, const RngStream& rng) {
  if (scheme.universe_n() != g.vertex_count()) {
    throw SchemeMismatch("make_message: scheme universe n=" +
                         std::to_string(scheme.universe_n()) +
                         " does not match graph n=" +
                         std::to_string(g.vertex_count()));
  }
  VertexMessage msg;
  msg.sender = v;
  SplitMix64 engine = rng.make_engine();
  for (VertexId w : k_out_picks(g, v, k, engine)) {
    msg.sampled_edges.push_back(make_edge(v, w));
  }
  std::sort(msg.sampled_edges.begin(), msg.sampled_edges.end());
  msg.sketch = vertex_sketch(g, scheme, v);
  msg.bit_count =
      msg.sampled_edges.size() * 2ull * id_bits(g.vertex_count()) +
      scheme.name_bits();
  return msg;
}

ProtocolOutcome referee(std::span<const VertexMessage> messages,
                        const NamingScheme& scheme, std::uint32_t n) {
  if (messages.size() != n) {
    throw MissingMessage("referee: expected " + std::to_string(n) +
                         " messages, got " + std::to_string(messages.size()));
  }
  if (scheme.universe_n() != n) {
    throw SchemeMismatch("referee: scheme universe n=" +
                         std::to_string(scheme.universe_n()) +
                         " does not match n=" + std::to_string(n));
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (messages[v].sender != v) {
      throw MissingMessage("referee: position " + std::to_string(v) +
                           " holds a message from vertex " +
                           std::to_string(messages[v].sender));
    }
    if (messages[v].sketch.bit_count() != scheme.name_bits()) {
      throw SchemeMismatch("referee: sketch of vertex " + std::to_string(v) +
                           " has " +
                           std::to_string(messages[v].sketch.bit_count()) +
                           " bits, scheme has " +
                           std::to_string(scheme.name_bits()));
    }
  }

  ProtocolOutcome out;
  out.rounds_used = 1;
  record_bits(messages, out);

  std::vector<Edge> sampled;
  for (const VertexMessage& m : messages) {
    sampled.insert(sampled.end(), m.sampled_edges.begin(),
                   m.sampled_edges.end());
  }
  out.forest = spanning_forest(n, sampled);

  DisjointSets ds(n);
  for (Edge e : out.forest.edges) ds.unite(e.u, e.v);

  DecodeMemo memo(scheme, scheme.resilience());
  bool all_final = false;
  while (true) {
    std::vector<BitString> folded =
        fold_components(ds, messages, scheme.name_bits());
    std::vector<std::uint32_t> pending = pending_roots(ds, folded);
    if (pending.empty()) {
      all_final = true;
      break;
    }
    std::vector<Edge> cut_edges;
    for (std::uint32_t root : pending) {
      const auto& decoded = memo.decode(folded[root], out.decode_failures);
      if (decoded) {
        cut_edges.insert(cut_edges.end(), decoded->begin(), decoded->end());
      }
    }
    std::sort(cut_edges.begin(), cut_edges.end());
    cut_edges.erase(std::unique(cut_edges.begin(), cut_edges.end()),
                    cut_edges.end());
    std::uint32_t merges = 0;
    for (Edge e : cut_edges) {
      if (ds.unite(e.u, e.v)) {
        out.forest.edges.push_back(e);
        ++merges;
      }
    }
    if (merges == 0) break;  // every remaining component is stuck
  }
  std::sort(out.forest.edges.begin(), out.forest.edges.end());
  out.success = all_final && out.decode_failures == 0;
  return out;
}

ProtocolOutcome run_protocol(const Graph& g, std::uint32_t k, std::uint32_t r,
                             SchemeKind kind, std::uint64_t master_seed) {
  const std::uint32_t n = g.vertex_count();
  auto scheme = make_scheme(kind, n, r, mix64(master_seed, 0x6e616d65));
  RngStream rng{master_seed, 0};
  std::vector<VertexMessage> messages;
  messages.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    messages.push_back(make_message(g, v, k, *scheme, rng.substream(v)));
  }
  ProtocolOutcome out = referee(messages, *scheme, n);
  // A decode beyond the resilience budget can merge along phantom edges
  // without tripping any referee-visible check; the ground-truth audit is
  // the only place that catches it.
  if (out.success && !verify_forest(g, out)) out.success = false;
  return out;
}

std::uint32_t alt_resilience(std::uint32_t n, double c) {
  double sq = std::sqrt(static_cast<double>(n));
  return static_cast<std::uint32_t>(std::ceil(c * sq * alt_rounds(n)));
}

ProtocolOutcome alt_protocol(const Graph& g, double c,
                             std::uint64_t master_seed) {
  if (!(c >= 2.0)) {
    throw BadParameters("alt_protocol: requires c >= 2");
  }
  const std::uint32_t n = g.vertex_count();
  ProtocolOutcome out;
  if (n == 0) {
    out.success = true;
    return out;
  }

  const std::uint32_t rounds = alt_rounds(n);
  const double sq = std::sqrt(static_cast<double>(n));
  const double p = std::min(1.0, c / sq);
  const std::uint32_t r = alt_resilience(n, c);
  const std::uint32_t weight_cap = std::min(
      r, static_cast<std::uint32_t>(std::ceil(sq * rounds)));
  auto scheme = bch_names(n, r);

  RngStream rng{master_seed, 0};
  std::vector<AltVertexMessage> messages(n);
  for (VertexId v = 0; v < n; ++v) {
    AltVertexMessage& m = messages[v];
    m.sender = v;
    m.sample_rounds.resize(rounds);
    SplitMix64 engine = rng.substream(v).make_engine();
    std::uint64_t edge_total = 0;
    for (std::uint32_t i = 0; i < rounds; ++i) {
      for (VertexId w : g.neighbors(v)) {
        if (engine.next_double() < p) {
          m.sample_rounds[i].push_back(make_edge(v, w));
        }
      }
      edge_total += m.sample_rounds[i].size();
    }
    m.sketch = vertex_sketch(g, *scheme, v);
    m.bit_count = edge_total * 2ull * id_bits(n) + scheme->name_bits();
  }
  record_bits(std::span<const AltVertexMessage>(messages), out);

  std::vector<std::vector<Edge>> round_edges(rounds);
  for (const AltVertexMessage& m : messages) {
    for (std::uint32_t i = 0; i < rounds; ++i) {
      round_edges[i].insert(round_edges[i].end(), m.sample_rounds[i].begin(),
                            m.sample_rounds[i].end());
    }
  }
  for (auto& edges : round_edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  const std::uint32_t ell = scheme->name_bits();
  DisjointSets ds(n);
  std::vector<char> final_root(n, 0);

  // Marks zero-fold components final; true when every component is final.
  auto refresh_finals = [&]() {
    std::vector<BitString> folded =
        fold_components(ds, std::span<const AltVertexMessage>(messages), ell);
    bool all = true;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (ds.find(v) != v) continue;
      if (folded[v].is_zero()) {
        final_root[v] = 1;
      } else {
        all = false;
      }
    }
    return all;
  };

  DecodeMemo memo(*scheme, weight_cap);
  bool all_final = refresh_finals();
  for (std::uint32_t round = 0; !all_final && round < rounds; ++round) {
    out.rounds_used = round + 1;
    std::vector<std::uint32_t> snapshot;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (ds.find(v) == v && !final_root[v]) snapshot.push_back(v);
    }
    std::sort(snapshot.begin(), snapshot.end(),
              [&ds](std::uint32_t a, std::uint32_t b) {
                std::uint32_t sa = ds.set_size(a);
                std::uint32_t sb = ds.set_size(b);
                return sa != sb ? sa < sb : a < b;
              });
    std::vector<char> handled(n, 0);
    for (std::uint32_t snap : snapshot) {
      std::uint32_t root = ds.find(snap);
      if (handled[root] || final_root[root]) continue;
      // Lowest canonical round-i edge leaving the current component.
      const Edge* crossing = nullptr;
      for (const Edge& e : round_edges[round]) {
        if ((ds.find(e.u) == root) != (ds.find(e.v) == root)) {
          crossing = &e;
          break;
        }
      }
      if (crossing != nullptr) {
        Edge e = *crossing;
        ds.unite(e.u, e.v);
        out.forest.edges.push_back(e);
        handled[ds.find(e.u)] = 1;
        continue;
      }
      // No outgoing sample this round: infer the cut from the sketch.
      BitString syndrome(ell);
      for (std::uint32_t v = 0; v < n; ++v) {
        if (ds.find(v) == root) syndrome ^= messages[v].sketch;
      }
      if (syndrome.is_zero()) {
        final_root[root] = 1;
        handled[root] = 1;
        continue;
      }
      const auto& decoded = memo.decode(syndrome, out.decode_failures);
      if (decoded) {
        for (Edge e : *decoded) {
          if (ds.unite(e.u, e.v)) out.forest.edges.push_back(e);
        }
      }
      handled[ds.find(root)] = 1;
    }
    all_final = refresh_finals();
  }
  std::sort(out.forest.edges.begin(), out.forest.edges.end());
  out.success = all_final && out.decode_failures == 0;
  if (out.success && !verify_forest(g, out)) out.success = false;
  return out;
}

bool verify_forest(const Graph& g, const ProtocolOutcome& outcome) {
  return verify_forest(g, outcome.forest);
}

bool verify_forest(const Graph& g, const Forest& forest) {
  const std::uint32_t n = g.vertex_count();
  DisjointSets ds(n);
  for (Edge e : forest.edges) {
    if (e.u >= n || e.v >= n || !g.has_edge(e)) return false;
    if (!ds.unite(e.u, e.v)) return false;  // duplicate or cycle
  }
  Partition truth = components(g);
  if (truth.component_count != ds.set_count()) return false;
  // Equal counts plus every true component contained in one forest
  // component forces the two partitions to coincide.
  std::vector<std::uint32_t> root_of_label(truth.component_count, n);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t label = truth.component_id[v];
    std::uint32_t root = ds.find(v);
    if (root_of_label[label] == n) {
      root_of_label[label] = root;
    } else if (root_of_label[label] != root) {
      return false;
    }
  }
  return true;
}

}  // namespace kout
