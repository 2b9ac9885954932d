#include "kout/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "kout/connectivity.hpp"
#include "kout/errors.hpp"
#include "kout/mapreduce.hpp"
#include "kout/parallel.hpp"
#include "kout/protocol.hpp"
#include "kout/rng.hpp"
#include "kout/sampling.hpp"
#include "kout/stats.hpp"

namespace kout {

namespace {

constexpr std::uint64_t kGraphSalt = 0x6772617068;  // "graph"

void validate(const ExperimentConfig& config, bool needs_ps = false) {
  if (config.trials < 1) {
    throw BadParameters("experiment: trials must be >= 1");
  }
  if (config.ns.empty()) {
    throw BadParameters("experiment: n grid must be nonempty");
  }
  if (config.ks.empty()) {
    throw BadParameters("experiment: k grid must be nonempty");
  }
  if (needs_ps && config.ps.empty()) {
    throw BadParameters("experiment: p grid must be nonempty");
  }
}

std::uint64_t trial_seed(std::uint64_t cell_seed, std::uint64_t t) {
  return RngStream::for_trial(cell_seed, t).master_seed;
}

/** Family real parameter (p for gnp): first ps entry when given, else 0. */
double family_real_param(const ExperimentConfig& config) {
  return config.ps.empty() ? 0.0 : config.ps.front();
}

/** Builds the cell's graph once when the family is deterministic, or a
 *  fresh instance per trial when it is randomized. */
class GraphFactory {
 public:
  GraphFactory(const ExperimentConfig& config, std::uint32_t n,
               std::uint32_t int_param, double real_param,
               std::uint64_t cell_seed)
      : config_(config),
        n_(n),
        int_param_(int_param),
        real_param_(real_param),
        cell_seed_(cell_seed),
        shape_(parse_tree_shape(config.tree_shape)),
        randomized_(family_is_randomized(config.family, shape_)) {
    if (!randomized_) {
      fixed_.emplace(make_family(config_.family, n_, int_param_, real_param_,
                                 shape_, 0));
    }
  }

  const Graph& get(std::uint64_t t, std::optional<Graph>& storage) const {
    if (!randomized_) return *fixed_;
    storage.emplace(make_family(
        config_.family, n_, int_param_, real_param_, shape_,
        mix64(trial_seed(cell_seed_, t), kGraphSalt)));
    return *storage;
  }

 private:
  const ExperimentConfig& config_;
  std::uint32_t n_;
  std::uint32_t int_param_;
  double real_param_;
  std::uint64_t cell_seed_;
  TreeShape shape_;
  bool randomized_;
  std::optional<Graph> fixed_;
};

EdgeSample sample_by_model(const std::string& model, const Graph& g,
                           std::uint32_t k, const RngStream& stream) {
  if (model == "k_out") return k_out_sample(g, k, stream);
  if (model == "expected_k_out") return expected_k_out_sample(g, k, stream);
  throw BadParameters("unknown sampling model '" + model + "'");
}

double inter_count(const Graph& g, const std::vector<Edge>& sample_edges) {
  Partition part = components(g.vertex_count(), sample_edges);
  return static_cast<double>(inter_component_count(g, part));
}

std::string u32(std::uint32_t x) { return std::to_string(x); }
std::string u64(std::uint64_t x) { return std::to_string(x); }

}  // namespace

TreeShape parse_tree_shape(const std::string& name) {
  if (name == "path") return TreeShape::path;
  if (name == "star") return TreeShape::star;
  if (name == "random") return TreeShape::random;
  throw BadParameters("unknown tree shape '" + name + "'");
}

SchemeKind parse_scheme_kind(const std::string& name) {
  if (name == "bch") return SchemeKind::bch;
  if (name == "random_names" || name == "random") {
    return SchemeKind::random_names;
  }
  throw BadParameters("unknown naming scheme '" + name + "'");
}

Graph make_family(const std::string& family, std::uint32_t n,
                  std::uint32_t int_param, double real_param, TreeShape shape,
                  std::uint64_t seed) {
  if (family == "complete") return gen_complete(n);
  if (family == "two_cliques") return gen_two_cliques_matching(n, int_param);
  if (family == "leafy_tree") return gen_leafy_tree(n, int_param, shape, seed);
  if (family == "clique_plus_small") {
    return gen_clique_plus_small_cliques(n, int_param);
  }
  if (family == "circulant") return gen_circulant(n, int_param);
  if (family == "gnp") return gen_gnp(n, real_param, seed);
  if (family == "random_regular") {
    return gen_random_regular(n, int_param, seed);
  }
  if (family == "near_regular") return gen_near_regular(n, int_param, seed);
  throw BadParameters("unknown family '" + family + "'");
}

bool family_is_randomized(const std::string& family, TreeShape shape) {
  if (family == "gnp" || family == "random_regular" ||
      family == "near_regular") {
    return true;
  }
  return family == "leafy_tree" && shape == TreeShape::random;
}

CsvTable exp_intercomponent(const ExperimentConfig& config) {
  validate(config);
  CsvTable table;
  table.header = {"family", "model", "tree_shape", "n",   "k",
                  "trials", "seed",  "mean",       "variance", "se",
                  "p50",    "p90",   "p99",        "max",  "ratio"};
  std::uint64_t cell = 0;
  for (std::uint32_t n : config.ns) {
    for (std::uint32_t k : config.ks) {
      std::uint64_t cs = mix64(config.master_seed, cell++);
      GraphFactory factory(config, n, k, family_real_param(config), cs);
      std::vector<double> xs(config.trials);
      parallel_for(config.trials, [&](std::uint64_t t) {
        std::optional<Graph> storage;
        const Graph& g = factory.get(t, storage);
        EdgeSample s =
            sample_by_model(config.model, g, k, RngStream::for_trial(cs, t));
        xs[t] = inter_count(g, s.edges);
      });
      Summary sum = summarize(xs);
      table.add_row({config.family, config.model, config.tree_shape, u32(n),
                     u32(k), u32(config.trials), u64(config.master_seed),
                     format_double(sum.mean), format_double(sum.variance),
                     format_double(sum.se), format_double(sum.p50),
                     format_double(sum.p90), format_double(sum.p99),
                     format_double(sum.max),
                     format_double(sum.mean * k / n)});
    }
  }
  return table;
}

CsvTable exp_tail(const ExperimentConfig& config) {
  validate(config);
  CsvTable table;
  table.header = {"family", "model", "tree_shape", "n",         "k",
                  "trials", "seed",  "mean",       "bhat",      "ell",
                  "threshold", "tail_prob", "tail_se"};
  std::uint64_t cell = 0;
  for (std::uint32_t n : config.ns) {
    for (std::uint32_t k : config.ks) {
      std::uint64_t cs = mix64(config.master_seed, cell++);
      GraphFactory factory(config, n, k, family_real_param(config), cs);
      std::vector<double> xs(config.trials);
      parallel_for(config.trials, [&](std::uint64_t t) {
        std::optional<Graph> storage;
        const Graph& g = factory.get(t, storage);
        EdgeSample s =
            sample_by_model(config.model, g, k, RngStream::for_trial(cs, t));
        xs[t] = inter_count(g, s.edges);
      });
      Summary sum = summarize(xs);
      double bhat = 2.0 * sum.mean * k / n;
      for (std::uint32_t ell = 1; ell <= 4; ++ell) {
        double threshold = ell * bhat * n / k;
        std::uint64_t over = 0;
        for (double x : xs) {
          if (x > threshold) ++over;
        }
        double tail = static_cast<double>(over) / config.trials;
        table.add_row({config.family, config.model, config.tree_shape, u32(n),
                       u32(k), u32(config.trials), u64(config.master_seed),
                       format_double(sum.mean), format_double(bhat), u32(ell),
                       format_double(threshold), format_double(tail),
                       format_double(proportion_se(tail, config.trials))});
      }
    }
  }
  return table;
}

CsvTable exp_sandwich(const ExperimentConfig& config) {
  validate(config);
  CsvTable table;
  table.header = {"family",  "tree_shape", "n",         "k",
                  "trials",  "seed",       "mean_x2k",  "se_x2k",
                  "mean_yk", "se_yk",      "mean_xhalf", "se_xhalf",
                  "lower_ok", "upper_ok"};
  std::uint64_t cell = 0;
  for (std::uint32_t n : config.ns) {
    for (std::uint32_t k : config.ks) {
      if (k < 2) {
        throw BadParameters("sandwich: k must be >= 2 so k/2 >= 1");
      }
      std::uint64_t cs = mix64(config.master_seed, cell++);
      GraphFactory factory(config, n, k, family_real_param(config), cs);
      // Pass 0: exact 2k-out.  Pass 1: expected k-out.  Pass 2: exact
      // floor(k/2)-out.  Same per-trial graphs, independent draw streams.
      Summary sums[3];
      for (int pass = 0; pass < 3; ++pass) {
        std::uint64_t ps = mix64(cs, static_cast<std::uint64_t>(pass) + 1);
        std::vector<double> xs(config.trials);
        parallel_for(config.trials, [&](std::uint64_t t) {
          std::optional<Graph> storage;
          const Graph& g = factory.get(t, storage);
          RngStream stream = RngStream::for_trial(ps, t);
          EdgeSample s = pass == 0   ? k_out_sample(g, 2 * k, stream)
                         : pass == 1 ? expected_k_out_sample(g, k, stream)
                                     : k_out_sample(g, k / 2, stream);
          xs[t] = inter_count(g, s.edges);
        });
        sums[pass] = summarize(xs);
      }
      auto band = [](const Summary& a, const Summary& b) {
        return 3.0 * std::sqrt(a.se * a.se + b.se * b.se);
      };
      bool lower = sums[0].mean <= sums[1].mean + band(sums[0], sums[1]);
      bool upper = sums[1].mean <= sums[2].mean + band(sums[1], sums[2]);
      table.add_row({config.family, config.tree_shape, u32(n), u32(k),
                     u32(config.trials), u64(config.master_seed),
                     format_double(sums[0].mean), format_double(sums[0].se),
                     format_double(sums[1].mean), format_double(sums[1].se),
                     format_double(sums[2].mean), format_double(sums[2].se),
                     lower ? "1" : "0", upper ? "1" : "0"});
    }
  }
  return table;
}

CsvTable exp_connectivity(const ExperimentConfig& config) {
  validate(config);
  std::vector<double> ladder =
      config.ps.empty() ? std::vector<double>{1, 2, 4, 8, 16, 32} : config.ps;
  CsvTable table;
  table.header = {"family", "n", "k", "d", "c", "trials",
                  "seed",   "connected_rate", "rate_se"};
  std::uint64_t cell = 0;
  for (std::uint32_t n : config.ns) {
    for (std::uint32_t k : config.ks) {
      for (double c : ladder) {
        std::uint64_t cs = mix64(config.master_seed, cell++);
        auto d = static_cast<std::uint32_t>(
            std::max(1.0, std::round(c * n / (2.0 * k))));
        if (2ull * d >= n) continue;  // circulant needs d < n/2
        Graph g = gen_circulant(n, d);
        std::vector<double> ok(config.trials);
        parallel_for(config.trials, [&](std::uint64_t t) {
          EdgeSample s = k_out_sample(g, k, RngStream::for_trial(cs, t));
          Partition part = components(n, s.edges);
          ok[t] = part.component_count <= 1 ? 1.0 : 0.0;
        });
        double rate = 0.0;
        for (double x : ok) rate += x;
        rate /= config.trials;
        table.add_row({"circulant", u32(n), u32(k), u32(d),
                       format_double(2.0 * d * k / n), u32(config.trials),
                       u64(config.master_seed), format_double(rate),
                       format_double(proportion_se(rate, config.trials))});
      }
    }
  }
  return table;
}

CsvTable exp_psample_compare(const ExperimentConfig& config) {
  validate(config);
  CsvTable table;
  table.header = {"family",    "tree_shape", "n",       "k",
                  "p",         "trials",     "seed",    "mean_kout",
                  "se_kout",   "mean_psample", "se_psample", "ratio"};
  std::uint64_t cell = 0;
  for (std::uint32_t n : config.ns) {
    for (std::uint32_t k : config.ks) {
      std::vector<double> p_axis = config.ps;
      std::uint64_t cs = mix64(config.master_seed, cell++);
      GraphFactory factory(config, n, k, family_real_param(config), cs);
      if (p_axis.empty()) {
        // Budget-matched default: expected p-sample size = expected k-out
        // size = k*n edges.  Derived from the trial-0 instance; for the
        // deterministic families this is exact for every trial.
        std::optional<Graph> storage;
        const Graph& g0 = factory.get(0, storage);
        p_axis.push_back(
            std::min(1.0, static_cast<double>(k) * n / g0.edge_count()));
      }
      for (double p : p_axis) {
        std::vector<double> kout(config.trials);
        std::vector<double> psamp(config.trials);
        std::uint64_t seed_k = mix64(cs, 1);
        std::uint64_t seed_p = mix64(cs, 2);
        parallel_for(config.trials, [&](std::uint64_t t) {
          std::optional<Graph> storage;
          const Graph& g = factory.get(t, storage);
          EdgeSample a = k_out_sample(g, k, RngStream::for_trial(seed_k, t));
          kout[t] = inter_count(g, a.edges);
          EdgeSample b = p_sample(g, p, RngStream::for_trial(seed_p, t));
          psamp[t] = inter_count(g, b.edges);
        });
        Summary sk = summarize(kout);
        Summary sp = summarize(psamp);
        double ratio = sk.mean == 0.0
                           ? std::numeric_limits<double>::infinity()
                           : sp.mean / sk.mean;
        table.add_row({config.family, config.tree_shape, u32(n), u32(k),
                       format_double(p), u32(config.trials),
                       u64(config.master_seed), format_double(sk.mean),
                       format_double(sk.se), format_double(sp.mean),
                       format_double(sp.se), format_double(ratio)});
      }
    }
  }
  return table;
}

CsvTable exp_almost_regular(const ExperimentConfig& config) {
  validate(config, /*needs_ps=*/true);
  CsvTable table;
  table.header = {"family", "n",  "r",      "p",      "trials",
                  "seed",   "mean", "se",   "mean_m", "ratio"};
  std::uint64_t cell = 0;
  for (std::uint32_t n : config.ns) {
    for (std::uint32_t r : config.ks) {
      for (double p : config.ps) {
        std::uint64_t cs = mix64(config.master_seed, cell++);
        GraphFactory factory(config, n, r, p, cs);
        std::vector<double> xs(config.trials);
        std::vector<double> ms(config.trials);
        parallel_for(config.trials, [&](std::uint64_t t) {
          std::optional<Graph> storage;
          const Graph& g = factory.get(t, storage);
          EdgeSample s = p_sample(g, p, RngStream::for_trial(cs, t));
          xs[t] = inter_count(g, s.edges);
          ms[t] = static_cast<double>(g.edge_count());
        });
        Summary sum = summarize(xs);
        Summary sm = summarize(ms);
        double ratio = sum.mean * p * sm.mean / (static_cast<double>(n) * n);
        table.add_row({config.family, u32(n), u32(r), format_double(p),
                       u32(config.trials), u64(config.master_seed),
                       format_double(sum.mean), format_double(sum.se),
                       format_double(sm.mean), format_double(ratio)});
      }
    }
  }
  return table;
}

CsvTable exp_protocol(const ExperimentConfig& config) {
  validate(config);
  const bool alt = config.model == "alt";
  const SchemeKind kind = parse_scheme_kind(config.scheme);
  CsvTable table;
  table.header = {"family",  "n",
                  "k",       "r",
                  "scheme_kind", "seed",
                  "success", "decode_failures",
                  "max_bits", "mean_bits"};
  std::uint64_t cell = 0;
  for (std::uint32_t n : config.ns) {
    for (std::uint32_t k : config.ks) {
      std::uint64_t cs = mix64(config.master_seed, cell++);
      GraphFactory factory(config, n, k, family_real_param(config), cs);
      std::uint32_t k_eff =
          k > 0 ? k
                : static_cast<std::uint32_t>(
                      std::ceil(std::sqrt(static_cast<double>(n))));
      std::uint32_t r_eff =
          alt ? alt_resilience(n, config.c)
              : (config.r > 0
                     ? config.r
                     : static_cast<std::uint32_t>(std::ceil(
                           config.c * std::sqrt(static_cast<double>(n)))));
      std::vector<std::vector<std::string>> rows(config.trials);
      parallel_for(config.trials, [&](std::uint64_t t) {
        std::optional<Graph> storage;
        const Graph& g = factory.get(t, storage);
        std::uint64_t ts = trial_seed(cs, t);
        ProtocolOutcome outcome =
            alt ? alt_protocol(g, config.c, ts)
                : run_protocol(g, k_eff, r_eff, kind, ts);
        rows[t] = {config.family,
                   u32(n),
                   u32(alt ? 0 : k_eff),
                   u32(r_eff),
                   alt ? "bch" : to_string(kind),
                   u64(ts),
                   outcome.success ? "1" : "0",
                   u64(outcome.decode_failures),
                   u64(outcome.max_bits),
                   format_double(outcome.mean_bits)};
      });
      for (auto& row : rows) table.add_row(std::move(row));
    }
  }
  return table;
}

CsvTable exp_mapreduce(const ExperimentConfig& config) {
  validate(config);
  CsvTable table;
  table.header = {"family", "n",          "k",        "budget", "seed",
                  "rounds", "peak_words", "verified", "violated"};
  std::uint64_t cell = 0;
  for (std::uint32_t n : config.ns) {
    for (std::uint32_t k : config.ks) {
      std::uint64_t cs = mix64(config.master_seed, cell++);
      GraphFactory factory(config, n, k, family_real_param(config), cs);
      std::uint64_t budget =
          config.budget > 0 ? config.budget : 4ull * n * k;
      std::vector<std::vector<std::string>> rows(config.trials);
      parallel_for(config.trials, [&](std::uint64_t t) {
        std::optional<Graph> storage;
        const Graph& g = factory.get(t, storage);
        std::uint64_t ts = trial_seed(cs, t);
        std::uint64_t rounds = 0, peak = 0;
        bool verified = false, violated = false;
        try {
          SimResult res = simulate(g, k, budget, ts);
          rounds = res.trace.size();
          peak = peak_words(res.trace);
          verified = verify_forest(g, res.forest);
        } catch (const BudgetExceeded& e) {
          rounds = e.round;
          peak = e.words;
          violated = true;
        }
        rows[t] = {config.family,
                   u32(n),
                   u32(k),
                   u64(budget),
                   u64(ts),
                   u64(rounds),
                   u64(peak),
                   verified ? "1" : "0",
                   violated ? "1" : "0"};
      });
      for (auto& row : rows) table.add_row(std::move(row));
    }
  }
  return table;
}

CsvTable run_experiment(const ExperimentConfig& config) {
  if (config.experiment == "intercomponent") return exp_intercomponent(config);
  if (config.experiment == "tail") return exp_tail(config);
  if (config.experiment == "sandwich") return exp_sandwich(config);
  if (config.experiment == "connectivity") return exp_connectivity(config);
  if (config.experiment == "psample_compare") {
    return exp_psample_compare(config);
  }
  if (config.experiment == "almost_regular") return exp_almost_regular(config);
  if (config.experiment == "protocol") return exp_protocol(config);
  if (config.experiment == "mapreduce") return exp_mapreduce(config);
  throw BadParameters("unknown experiment '" + config.experiment + "'");
}

}  // namespace kout
