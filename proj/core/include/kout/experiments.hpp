#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kout/csv.hpp"
#include "kout/generators.hpp"
#include "kout/graph.hpp"
#include "kout/naming.hpp"

namespace kout {

/**
 * One experiment request: a named measurement over a family grid with
 * Monte Carlo trials.  Which axes matter depends on the experiment (ks
 * doubles as d for circulant and as the regularity r; ps carries sampling
 * probabilities, or the connectivity experiment's c ladder).  Every run is
 * a pure function of this struct: no ambient randomness, the seed is
 * mandatory.
 */
struct ExperimentConfig {
  std::string experiment = "intercomponent";
  std::string family = "leafy_tree";
  std::vector<std::uint32_t> ns = {256};
  std::vector<std::uint32_t> ks = {8};
  std::vector<double> ps;
  std::string model = "k_out";  // k_out | expected_k_out | one_shot | alt
  std::string tree_shape = "path";
  std::uint32_t trials = 100;
  std::uint64_t master_seed = 1;
  std::uint32_t r = 0;           // naming resilience; 0 derives the default
  std::string scheme = "bch";    // bch | random_names
  double c = 2.0;                // alt-protocol sampling-rate constant
  std::uint64_t budget = 0;      // mapreduce word budget; 0 derives 4*n*k
  std::string out_path;          // consumed by the CLI only
};

TreeShape parse_tree_shape(const std::string& name);
SchemeKind parse_scheme_kind(const std::string& name);

/** Instantiates one family member.  int_param is k for the constructed
 *  families, d for circulant, the regularity for (near-)regular graphs;
 *  real_param is p for gnp; seed feeds the randomized families only. */
Graph make_family(const std::string& family, std::uint32_t n,
                  std::uint32_t int_param, double real_param, TreeShape shape,
                  std::uint64_t seed);

/** True when regenerating per trial draws a different graph. */
bool family_is_randomized(const std::string& family, TreeShape shape);

/** Mean inter-component edge count per (n, k) cell, with the scale-free
 *  ratio column mean*k/n. */
CsvTable exp_intercomponent(const ExperimentConfig& config);

/** Empirical tail P[X > ell * bhat * n/k] for ell = 1..4, with bhat
 *  calibrated as 2 * mean * k/n from the same trials. */
CsvTable exp_tail(const ExperimentConfig& config);

/** Means under exact 2k-out, expected k-out, and exact floor(k/2)-out on
 *  the same cell, with ordering audit columns. */
CsvTable exp_sandwich(const ExperimentConfig& config);

/** Connected-sample rate over circulant graphs: for each n, k, and ladder
 *  value c, the cut degree is 2d with d = round(c*n/(2k)). */
CsvTable exp_connectivity(const ExperimentConfig& config);

/** k-out versus budget-matched p-sampling (p = k*n/m unless ps overrides)
 *  on the same cell; ratio column mean_psample / mean_kout. */
CsvTable exp_psample_compare(const ExperimentConfig& config);

/** Inter-component mean under p-sampling on (near-)regular families, with
 *  the scale-free normalization ratio mean * p * mean_m / n^2. */
CsvTable exp_almost_regular(const ExperimentConfig& config);

/** One row per trial: the protocol outcome under the one-shot (model
 *  "one_shot", default) or multi-round (model "alt") scheme. */
CsvTable exp_protocol(const ExperimentConfig& config);

/** One row per simulated run: rounds, peak words, budget verdicts. */
CsvTable exp_mapreduce(const ExperimentConfig& config);

/** Dispatches on config.experiment; BadParameters for unknown names. */
CsvTable run_experiment(const ExperimentConfig& config);

}  // namespace kout
