#include "kout/mapreduce.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "kout/errors.hpp"
#include "kout/sampling.hpp"

namespace kout {

namespace {

RoundTrace make_round(std::uint32_t round, std::uint32_t n,
                      std::uint64_t budget, bool modeled) {
  RoundTrace rt;
  rt.round = round;
  rt.budget = budget;
  rt.modeled_broadcast = modeled;
  rt.loads.resize(n + 2);
  for (std::uint32_t i = 0; i < n + 2; ++i) rt.loads[i].machine = i;
  return rt;
}

/** Aborts at the first machine (id order) whose round total exceeds the
 *  budget; a run never continues past a violation. */
void enforce(const RoundTrace& rt) {
  for (const MachineLoad& load : rt.loads) {
    std::uint64_t total = load.words_in + load.words_out;
    if (total > rt.budget) {
      throw BudgetExceeded(rt.round, load.machine, total, rt.budget);
    }
  }
}

}  // namespace

SimResult simulate(const Graph& g, std::uint32_t k, std::uint64_t m_budget,
                   std::uint64_t master_seed) {
  const std::uint32_t n = g.vertex_count();
  const std::uint32_t referee = n;
  const std::uint32_t final_machine = n + 1;
  RngStream rng{master_seed, 0};

  // Round-1 sends, drawn exactly as k_out_sample draws them so the forest
  // the referee computes matches the library sampler seed-for-seed.
  std::vector<Edge> sample;
  std::vector<std::uint64_t> sent(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    SplitMix64 engine = rng.substream(v).make_engine();
    std::vector<VertexId> picks = k_out_picks(g, v, k, engine);
    sent[v] = picks.size();
    for (VertexId w : picks) sample.push_back(make_edge(v, w));
  }
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());

  Forest kout_forest = spanning_forest(n, sample);
  const std::uint64_t forest_words = 2ull * kout_forest.edges.size();

  Partition part = components(n, kout_forest.edges);
  std::vector<Edge> inter;  // edges of g crossing two sample components
  std::vector<std::uint64_t> owned(n, 0);  // emitted by the smaller endpoint
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.neighbors(u)) {
      if (u < w && part.component_id[u] != part.component_id[w]) {
        inter.push_back(Edge{u, w});
        ++owned[u];
      }
    }
  }

  SimResult result;

  RoundTrace r1 = make_round(1, n, m_budget, false);
  for (VertexId v = 0; v < n; ++v) {
    r1.loads[v].words_in = 2ull * g.degree(v);
    r1.loads[v].words_out = 2ull * sent[v];
  }
  enforce(r1);
  result.trace.push_back(std::move(r1));

  RoundTrace r2 = make_round(2, n, m_budget, true);
  std::uint64_t referee_in = 0;
  for (VertexId v = 0; v < n; ++v) {
    r2.loads[v].words_in = 2ull * g.degree(v);
    referee_in += 2ull * sent[v];
  }
  r2.loads[referee].words_in = referee_in;
  r2.loads[referee].words_out = forest_words;  // one copy into the fabric
  enforce(r2);
  result.trace.push_back(std::move(r2));

  RoundTrace r3 = make_round(3, n, m_budget, true);  // fabric relays
  for (VertexId v = 0; v < n; ++v) {
    r3.loads[v].words_in = 2ull * g.degree(v);
  }
  enforce(r3);
  result.trace.push_back(std::move(r3));

  RoundTrace r4 = make_round(4, n, m_budget, false);
  for (VertexId v = 0; v < n; ++v) {
    r4.loads[v].words_in = 2ull * g.degree(v) + forest_words;
    r4.loads[v].words_out = 2ull * owned[v];
  }
  if (n > 0) {
    r4.loads[0].words_out += forest_words;  // forwards F to the final machine
  }
  r4.loads[final_machine].words_in = 2ull * inter.size() + forest_words;
  enforce(r4);
  result.trace.push_back(std::move(r4));

  std::vector<Edge> final_input = kout_forest.edges;
  final_input.insert(final_input.end(), inter.begin(), inter.end());
  result.forest = spanning_forest(n, final_input);
  return result;
}

std::uint64_t peak_words(const std::vector<RoundTrace>& trace) {
  std::uint64_t peak = 0;
  for (const RoundTrace& rt : trace) {
    for (const MachineLoad& load : rt.loads) {
      peak = std::max(peak, load.words_in + load.words_out);
    }
  }
  return peak;
}

std::string trace_to_csv(const std::vector<RoundTrace>& trace) {
  std::string out = "# kout-sketch v1\n";
  out += "round,machine,words_in,words_out,budget,violated\n";
  for (const RoundTrace& rt : trace) {
    for (const MachineLoad& load : rt.loads) {
      bool violated = std::find(rt.violations.begin(), rt.violations.end(),
                                load.machine) != rt.violations.end();
      out += std::to_string(rt.round);
      out += ',';
      out += std::to_string(load.machine);
      out += ',';
      out += std::to_string(load.words_in);
      out += ',';
      out += std::to_string(load.words_out);
      out += ',';
      out += std::to_string(rt.budget);
      out += ',';
      out += violated ? "1\n" : "0\n";
    }
  }
  return out;
}

}  // namespace kout
