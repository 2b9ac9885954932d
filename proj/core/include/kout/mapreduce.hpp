#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "kout/connectivity.hpp"
#include "kout/graph.hpp"
#include "kout/rng.hpp"

namespace kout {

/** Word ledger of one machine in one round.  A machine's budget comparand
 *  is words_in + words_out: everything it receives, holds while computing,
 *  and sends within the round. */
struct MachineLoad {
  std::uint32_t machine = 0;  // 0..n-1 vertex machines, n referee, n+1 final
  std::uint64_t words_in = 0;
  std::uint64_t words_out = 0;
};

struct RoundTrace {
  std::uint32_t round = 0;        // 1..4
  std::vector<MachineLoad> loads;  // one entry per machine, id order
  std::uint64_t budget = 0;
  /** True on rounds 2-3: forest distribution rides a broadcast fabric whose
   *  per-recipient cost (2 words per forest edge) is modeled, not derived
   *  from explicit relay machines. */
  bool modeled_broadcast = false;
  std::vector<std::uint32_t> violations;  // machines with in+out > budget
};

struct SimResult {
  Forest forest;
  std::vector<RoundTrace> trace;  // exactly 4 entries
};

/** Unit of accounting: one key or vertex id of ceil(log2(n+2)) bits (n+2
 *  distinct machine addresses); an edge costs 2 words. */
inline std::uint32_t word_bits(std::uint32_t n) {
  return static_cast<std::uint32_t>(std::bit_width(n + 1));
}

/**
 * Four-round spanning-forest computation under strict per-machine word
 * budgets.  Round 1: every vertex machine reads its recirculated incident
 * edges and sends its k-out picks to the referee.  Round 2: the referee
 * computes the spanning forest F of the union sample and hands one copy to
 * the broadcast fabric.  Round 3: the fabric relays.  Round 4: every
 * vertex machine receives F plus its recirculated edges, and the owner
 * (smaller endpoint) of each edge crossing two components of F forwards it
 * to the final machine, which outputs a spanning forest of F union the
 * crossing edges.  Machines are stateless: each round's sends are a pure
 * function of that round's inbox, which is why the input recirculates and
 * vertex machine 0 re-sends F to the final machine in round 4.
 *
 * Throws BudgetExceeded at the first machine whose round total exceeds
 * m_budget (lowest round, then lowest machine id).
 */
SimResult simulate(const Graph& g, std::uint32_t k, std::uint64_t m_budget,
                   std::uint64_t master_seed);

/** Largest in+out total over all rounds and machines of the trace. */
std::uint64_t peak_words(const std::vector<RoundTrace>& trace);

/** One row per machine per round: round,machine,words_in,words_out,budget,violated. */
std::string trace_to_csv(const std::vector<RoundTrace>& trace);

}  // namespace kout
