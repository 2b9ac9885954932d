#include "kout/graph.hpp"

#include <algorithm>
#include <string>

namespace kout {

Graph::Graph(std::uint32_t n, std::span<const Edge> edges) : n_(n) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const Edge& e : edges) {
    es.push_back(make_edge(e.u, e.v));  // re-canonicalize defensively
  }
  build(std::move(es));
}

Graph::Graph(std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& endpoint_pairs)
    : n_(n) {
  std::vector<Edge> es;
  es.reserve(endpoint_pairs.size());
  for (auto [a, b] : endpoint_pairs) es.push_back(make_edge(a, b));
  build(std::move(es));
}

void Graph::build(std::vector<Edge>&& edges) {
  for (const Edge& e : edges) {
    if (e.v >= n_) {
      throw VertexOutOfRange("vertex " + std::to_string(e.v) + " not in [0, " +
                             std::to_string(n_) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  std::vector<std::uint32_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  adj_off_.assign(n_ + 1, 0);
  for (std::uint32_t v = 0; v < n_; ++v) adj_off_[v + 1] = adj_off_[v] + deg[v];
  adj_flat_.resize(adj_off_[n_]);
  std::vector<std::uint64_t> cursor(adj_off_.begin(), adj_off_.end() - 1);
  for (const Edge& e : edges_) {
    adj_flat_[cursor[e.u]++] = e.v;
    adj_flat_[cursor[e.v]++] = e.u;
  }
  // Edges are processed in sorted order, so each list comes out sorted for
  // every vertex except that entries added as "larger endpoint" interleave;
  // sort each list to make neighbor order canonical.
  for (std::uint32_t v = 0; v < n_; ++v) {
    std::sort(adj_flat_.begin() + static_cast<std::ptrdiff_t>(adj_off_[v]),
              adj_flat_.begin() + static_cast<std::ptrdiff_t>(adj_off_[v + 1]));
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v >= n_) throw VertexOutOfRange("vertex " + std::to_string(v));
  return {adj_flat_.data() + adj_off_[v], adj_off_[v + 1] - adj_off_[v]};
}

std::uint32_t Graph::degree(VertexId v) const {
  if (v >= n_) throw VertexOutOfRange("vertex " + std::to_string(v));
  return static_cast<std::uint32_t>(adj_off_[v + 1] - adj_off_[v]);
}

std::uint32_t Graph::max_degree() const {
  std::uint32_t best = 0;
  for (std::uint32_t v = 0; v < n_; ++v) {
    best = std::max(best, static_cast<std::uint32_t>(adj_off_[v + 1] - adj_off_[v]));
  }
  return best;
}

bool Graph::has_edge(Edge e) const {
  Edge canon = make_edge(e.u, e.v);
  return std::binary_search(edges_.begin(), edges_.end(), canon);
}

}  // namespace kout
