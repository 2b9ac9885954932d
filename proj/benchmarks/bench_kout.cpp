#include <benchmark/benchmark.h>

#include "kout/connectivity.hpp"
#include "kout/generators.hpp"
#include "kout/naming.hpp"
#include "kout/protocol.hpp"
#include "kout/rng.hpp"
#include "kout/sampling.hpp"

using namespace kout;

static void BM_KOutSample(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto k = static_cast<std::uint32_t>(state.range(1));
  Graph g = gen_leafy_tree(n, k, TreeShape::path);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    EdgeSample s = k_out_sample(g, k, RngStream::for_trial(7, trial++));
    benchmark::DoNotOptimize(s.edges.data());
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_KOutSample)->Args({1024, 8})->Args({4096, 16})->Args({16384, 32});

static void BM_Components(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  Graph g = gen_gnp(n, 4.0 / n, 99);
  for (auto _ : state) {
    Partition p = components(n, g.edges());
    benchmark::DoNotOptimize(p.component_count);
  }
  state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Components)->Arg(1024)->Arg(16384);

static void BM_BchName(benchmark::State& state) {
  auto scheme = bch_names(1024, 8);
  SplitMix64 engine(3);
  for (auto _ : state) {
    std::uint32_t u = engine.next_below(1024), v = engine.next_below(1024);
    if (u == v) v = (v + 1) % 1024;
    BitString name = scheme->name(make_edge(u, v));
    benchmark::DoNotOptimize(name.words().front());
  }
}
BENCHMARK(BM_BchName);

static void BM_VertexSketch(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  Graph g = gen_gnp(n, 8.0 / n, 5);
  auto scheme = bch_names(n, 8);
  std::uint32_t v = 0;
  for (auto _ : state) {
    BitString s = vertex_sketch(g, *scheme, v);
    v = (v + 1) % n;
    benchmark::DoNotOptimize(s.words().front());
  }
}
BENCHMARK(BM_VertexSketch)->Arg(512)->Arg(4096);

static void BM_BchDecode(benchmark::State& state) {
  const auto weight = static_cast<std::uint32_t>(state.range(0));
  auto scheme = bch_names(512, 8);
  SplitMix64 engine(11);
  std::vector<Edge> planted;
  while (planted.size() < weight) {
    std::uint32_t u = engine.next_below(512), v = engine.next_below(512);
    if (u != v) planted.push_back(make_edge(u, v));
  }
  BitString syndrome = xor_names(*scheme, planted);
  for (auto _ : state) {
    auto decoded = scheme->decode(syndrome, 8);
    benchmark::DoNotOptimize(decoded);
  }
}
BENCHMARK(BM_BchDecode)->Arg(2)->Arg(8);

static void BM_OneShotProtocol(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  Graph g = gen_two_cliques_matching(n, 8);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    ProtocolOutcome out = run_protocol(g, 8, 16, SchemeKind::bch, trial++);
    benchmark::DoNotOptimize(out.success);
  }
}
BENCHMARK(BM_OneShotProtocol)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
