#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kout/connectivity.hpp"
#include "kout/csv.hpp"
#include "kout/edge_list_io.hpp"
#include "kout/errors.hpp"
#include "kout/experiments.hpp"
#include "kout/mapreduce.hpp"
#include "kout/protocol.hpp"
#include "kout/rng.hpp"
#include "kout/sampling.hpp"
#include "kout/svg_plot.hpp"

namespace {

using nlohmann::json;

struct CliState {
  kout::ExperimentConfig cfg;
  std::string config_path;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  bool check = false;
  bool alt = false;
  double threshold = 5.0;
  double min_success = 0.5;
  std::string trace_path;
  // plot
  std::string in_path;
  std::string x_col;
  std::vector<std::string> y_cols;
  std::string group_col;
  std::string title;
  bool linear_x = false;
  bool linear_y = false;
  bool slope = false;
};

void load_config_file(kout::ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw kout::BadParameters("cannot open config file '" + path + "'");
  }
  try {
    json j;
    in >> j;
    if (!j.is_object()) {
      throw kout::BadParameters("config must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
      if (key == "experiment") {
        cfg.experiment = value.get<std::string>();
      } else if (key == "family") {
        cfg.family = value.get<std::string>();
      } else if (key == "ns") {
        cfg.ns = value.get<std::vector<std::uint32_t>>();
      } else if (key == "ks") {
        cfg.ks = value.get<std::vector<std::uint32_t>>();
      } else if (key == "ps") {
        cfg.ps = value.get<std::vector<double>>();
      } else if (key == "n") {
        cfg.ns = {value.get<std::uint32_t>()};
      } else if (key == "k") {
        cfg.ks = {value.get<std::uint32_t>()};
      } else if (key == "p") {
        cfg.ps = {value.get<double>()};
      } else if (key == "model") {
        cfg.model = value.get<std::string>();
      } else if (key == "tree_shape") {
        cfg.tree_shape = value.get<std::string>();
      } else if (key == "trials") {
        cfg.trials = value.get<std::uint32_t>();
      } else if (key == "master_seed" || key == "seed") {
        cfg.master_seed = value.get<std::uint64_t>();
      } else if (key == "r") {
        cfg.r = value.get<std::uint32_t>();
      } else if (key == "scheme") {
        cfg.scheme = value.get<std::string>();
      } else if (key == "c") {
        cfg.c = value.get<double>();
      } else if (key == "budget") {
        cfg.budget = value.get<std::uint64_t>();
      } else if (key == "out_path" || key == "out") {
        cfg.out_path = value.get<std::string>();
      } else {
        throw kout::BadParameters("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw kout::BadParameters("config error in '" + path + "': " + e.what());
  }
}

void merge_cli_over_json(CLI::App* sub, const kout::ExperimentConfig& cli,
                         kout::ExperimentConfig& target) {
  if (sub->count("--family")) target.family = cli.family;
  if (sub->count("--ns")) target.ns = cli.ns;
  if (sub->count("--ks")) target.ks = cli.ks;
  if (sub->count("--ps")) target.ps = cli.ps;
  if (sub->count("--model")) target.model = cli.model;
  if (sub->count("--shape")) target.tree_shape = cli.tree_shape;
  if (sub->count("--trials")) target.trials = cli.trials;
  if (sub->count("--seed")) target.master_seed = cli.master_seed;
  if (sub->count("--r")) target.r = cli.r;
  if (sub->count("--scheme")) target.scheme = cli.scheme;
  if (sub->count("--c")) target.c = cli.c;
  if (sub->count("--budget")) target.budget = cli.budget;
  if (sub->count("--out")) target.out_path = cli.out_path;
}

void add_common(CLI::App* sub, CliState& s) {
  sub->add_option("--config", s.config_path,
                  "JSON config file; explicit flags override its keys");
  sub->add_option("--family", s.cfg.family,
                  "complete|two_cliques|leafy_tree|clique_plus_small|"
                  "circulant|gnp|random_regular|near_regular");
  sub->add_option("--n", s.n, "single n (shorthand for --ns)");
  sub->add_option("--k", s.k, "single k (shorthand for --ks)");
  sub->add_option("--ns", s.cfg.ns, "comma-separated n grid")->delimiter(',');
  sub->add_option("--ks", s.cfg.ks, "comma-separated k grid")->delimiter(',');
  sub->add_option("--ps", s.cfg.ps,
                  "comma-separated p grid (or connectivity c ladder)")
      ->delimiter(',');
  sub->add_option("--model", s.cfg.model,
                  "k_out|expected_k_out|p_sample (protocol: one_shot|alt)");
  sub->add_option("--shape", s.cfg.tree_shape, "leafy tree shape: path|star|random");
  sub->add_option("--trials", s.cfg.trials, "Monte Carlo trials per cell");
  sub->add_option("--seed", s.cfg.master_seed, "master seed (mandatory determinism)");
  sub->add_option("--r", s.cfg.r, "naming resilience (0 = derive default)");
  sub->add_option("--scheme", s.cfg.scheme, "bch|random_names");
  sub->add_option("--c", s.cfg.c, "protocol constant c");
  sub->add_option("--budget", s.cfg.budget, "mapreduce word budget (0 = 4nk)");
  sub->add_option("--out", s.cfg.out_path, "output file (default: stdout)");
}

void finalize_config(CLI::App* sub, CliState& s) {
  if (!s.config_path.empty()) {
    kout::ExperimentConfig merged;
    load_config_file(merged, s.config_path);
    merge_cli_over_json(sub, s.cfg, merged);
    s.cfg = merged;
  }
  if (sub->count("--n")) s.cfg.ns = {s.n};
  if (sub->count("--k")) s.cfg.ks = {s.k};
}

void emit(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw kout::BadParameters("cannot open output file '" + path + "'");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw kout::BadParameters("cannot open input file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/** Built-in pass/fail judgment per experiment; true = pass.  Experiments
 *  without a natural threshold always pass. */
bool check_table(const std::string& experiment, const kout::CsvTable& t,
                 double threshold, double min_success, std::string& why) {
  if (experiment == "sandwich") {
    std::size_t lo = t.column("lower_ok");
    std::size_t hi = t.column("upper_ok");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.value(i, lo) != 1.0 || t.value(i, hi) != 1.0) {
        why = "sandwich ordering violated in row " + std::to_string(i);
        return false;
      }
    }
    return true;
  }
  if (experiment == "tail") {
    std::size_t ell = t.column("ell");
    std::size_t prob = t.column("tail_prob");
    std::size_t se = t.column("tail_se");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      double bound = std::pow(2.0, -t.value(i, ell)) + 3.0 * t.value(i, se);
      if (t.value(i, prob) > bound) {
        why = "tail above 2^-ell + 3se in row " + std::to_string(i);
        return false;
      }
    }
    return true;
  }
  if (experiment == "connectivity") {
    std::size_t rate = t.column("connected_rate");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.value(i, rate) >= 0.5) return true;
    }
    why = "no ladder cell reached connected_rate 0.5";
    return false;
  }
  if (experiment == "psample_compare") {
    std::size_t ratio = t.column("ratio");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (!(t.value(i, ratio) >= threshold)) {
        why = "ratio below " + kout::format_double(threshold) + " in row " +
              std::to_string(i);
        return false;
      }
    }
    return true;
  }
  if (experiment == "protocol") {
    std::size_t success = t.column("success");
    if (t.rows.empty()) return true;
    double rate = 0.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      rate += t.value(i, success);
    }
    rate /= static_cast<double>(t.rows.size());
    if (rate < min_success) {
      why = "success rate " + kout::format_double(rate) + " below " +
            kout::format_double(min_success);
      return false;
    }
    return true;
  }
  if (experiment == "mapreduce") {
    std::size_t verified = t.column("verified");
    std::size_t violated = t.column("violated");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.value(i, verified) != 1.0 || t.value(i, violated) != 0.0) {
        why = "row " + std::to_string(i) + " not verified or over budget";
        return false;
      }
    }
    return true;
  }
  why.clear();
  return true;
}

int run_checked(CliState& s) {
  kout::CsvTable table = kout::run_experiment(s.cfg);
  emit(s.cfg.out_path, kout::to_csv(table));
  if (!s.check) return 0;
  std::string why;
  if (!check_table(s.cfg.experiment, table, s.threshold, s.min_success, why)) {
    std::fprintf(stderr, "check failed: %s\n", why.c_str());
    return 1;
  }
  std::fprintf(stderr, "check passed\n");
  return 0;
}

int cmd_sample(CliState& s) {
  const kout::ExperimentConfig& cfg = s.cfg;
  std::uint32_t n = cfg.ns.at(0);
  std::uint32_t k = cfg.ks.at(0);
  double p = cfg.ps.empty() ? 0.0 : cfg.ps[0];
  kout::Graph g =
      kout::make_family(cfg.family, n, k, p,
                        kout::parse_tree_shape(cfg.tree_shape),
                        kout::mix64(cfg.master_seed, 0x6772617068));
  kout::RngStream stream{cfg.master_seed, 0};
  kout::EdgeSample sample;
  if (cfg.model == "k_out") {
    sample = kout::k_out_sample(g, k, stream);
  } else if (cfg.model == "expected_k_out") {
    sample = kout::expected_k_out_sample(g, k, stream);
  } else if (cfg.model == "p_sample") {
    if (cfg.ps.empty()) {
      throw kout::BadParameters("sample: p_sample needs --ps");
    }
    sample = kout::p_sample(g, p, stream);
  } else {
    throw kout::BadParameters("sample: unknown model '" + cfg.model + "'");
  }
  kout::Partition part = kout::components(g.vertex_count(), sample.edges);
  std::uint64_t inter = kout::inter_component_count(g, part);
  std::printf("family=%s n=%u k=%u model=%s seed=%llu\n", cfg.family.c_str(),
              n, k, cfg.model.c_str(),
              static_cast<unsigned long long>(cfg.master_seed));
  std::printf(
      "graph_edges=%llu sampled_edges=%zu components=%u "
      "inter_component_edges=%llu\n",
      static_cast<unsigned long long>(g.edge_count()), sample.edges.size(),
      part.component_count, static_cast<unsigned long long>(inter));
  if (!cfg.out_path.empty()) {
    kout::write_edge_list(kout::Graph(g.vertex_count(), sample.edges),
                          cfg.out_path);
  }
  return 0;
}

int cmd_protocol(CliState& s) {
  s.cfg.experiment = "protocol";
  if (s.alt) s.cfg.model = "alt";
  kout::CsvTable table = kout::exp_protocol(s.cfg);
  emit(s.cfg.out_path, kout::to_csv(table));
  std::size_t success = table.column("success");
  std::size_t failures = table.column("decode_failures");
  std::size_t bits = table.column("max_bits");
  double rate = 0.0, max_bits = 0.0;
  std::uint64_t total_failures = 0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    rate += table.value(i, success);
    total_failures += static_cast<std::uint64_t>(table.value(i, failures));
    max_bits = std::max(max_bits, table.value(i, bits));
  }
  if (!table.rows.empty()) rate /= static_cast<double>(table.rows.size());
  std::fprintf(stderr,
               "success_rate=%s decode_failures_total=%llu max_bits=%s\n",
               kout::format_double(rate).c_str(),
               static_cast<unsigned long long>(total_failures),
               kout::format_double(max_bits).c_str());
  if (s.check && rate < s.min_success) {
    std::fprintf(stderr, "check failed: success rate below %s\n",
                 kout::format_double(s.min_success).c_str());
    return 1;
  }
  return 0;
}

int cmd_mapreduce(CliState& s) {
  s.cfg.experiment = "mapreduce";
  if (!s.trace_path.empty()) {
    std::uint32_t n = s.cfg.ns.at(0);
    std::uint32_t k = s.cfg.ks.at(0);
    kout::Graph g = kout::make_family(
        s.cfg.family, n, k, s.cfg.ps.empty() ? 0.0 : s.cfg.ps[0],
        kout::parse_tree_shape(s.cfg.tree_shape),
        kout::mix64(s.cfg.master_seed, 0x6772617068));
    std::uint64_t budget =
        s.cfg.budget > 0 ? s.cfg.budget : 4ull * n * k;
    kout::SimResult res = kout::simulate(g, k, budget, s.cfg.master_seed);
    emit(s.trace_path, kout::trace_to_csv(res.trace));
  }
  return run_checked(s);
}

int cmd_plot(CliState& s) {
  kout::CsvTable table = kout::parse_csv(read_file(s.in_path));
  kout::PlotSpec spec;
  spec.x_column = s.x_col;
  spec.y_columns = s.y_cols;
  spec.group_by = s.group_col;
  spec.title = s.title;
  spec.log_x = !s.linear_x;
  spec.log_y = !s.linear_y;
  spec.annotate_slope = s.slope;
  emit(s.cfg.out_path, kout::render_svg(table, spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kout: k-out subgraph sampling, XOR sketching, one-way spanning-forest "
      "protocols, and a budgeted MapReduce-style simulation.\n"
      "Exit codes: 0 success, 1 threshold/check failure, 2 usage error."};
  app.require_subcommand(1);
  CliState s;

  CLI::App* sample = app.add_subcommand(
      "sample", "Draw one sample from a family instance and summarize it");
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Run a Monte Carlo experiment grid and emit CSV");
  CLI::App* protocol = app.add_subcommand(
      "protocol", "Run the one-way protocol experiment and emit CSV");
  CLI::App* mapreduce = app.add_subcommand(
      "mapreduce", "Run the four-round simulation experiment and emit CSV");
  CLI::App* plot =
      app.add_subcommand("plot", "Render columns of a CSV as an SVG plot");

  for (CLI::App* sub : {sample, experiment, protocol, mapreduce}) {
    add_common(sub, s);
  }
  experiment->add_option("--experiment", s.cfg.experiment,
                         "intercomponent|tail|sandwich|connectivity|"
                         "psample_compare|almost_regular|protocol|mapreduce");
  experiment->add_flag("--check", s.check,
                       "apply the experiment's built-in threshold check");
  experiment->add_option("--threshold", s.threshold,
                         "psample_compare ratio threshold");
  protocol->add_flag("--alt", s.alt, "run the multi-round variant");
  protocol->add_flag("--check", s.check, "require success rate >= min-success");
  protocol->add_option("--min-success", s.min_success,
                       "threshold for --check");
  mapreduce->add_flag("--check", s.check,
                      "require every run verified and within budget");
  mapreduce->add_option("--trace", s.trace_path,
                        "also write one run's per-machine trace CSV here");

  plot->add_option("--in", s.in_path, "input CSV")->required();
  plot->add_option("--x", s.x_col, "x column")->required();
  plot->add_option("--y", s.y_cols, "comma-separated y columns")
      ->delimiter(',')
      ->required();
  plot->add_option("--group", s.group_col, "split series by this column");
  plot->add_option("--title", s.title, "plot title");
  plot->add_flag("--linear-x", s.linear_x, "linear x axis (default log)");
  plot->add_flag("--linear-y", s.linear_y, "linear y axis (default log)");
  plot->add_flag("--slope", s.slope,
                 "annotate least-squares slope of the first series");
  plot->add_option("--out", s.cfg.out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sample->parsed()) {
      finalize_config(sample, s);
      return cmd_sample(s);
    }
    if (experiment->parsed()) {
      finalize_config(experiment, s);
      return run_checked(s);
    }
    if (protocol->parsed()) {
      finalize_config(protocol, s);
      return cmd_protocol(s);
    }
    if (mapreduce->parsed()) {
      finalize_config(mapreduce, s);
      return cmd_mapreduce(s);
    }
    if (plot->parsed()) {
      return cmd_plot(s);
    }
  } catch (const kout::BadParameters& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const kout::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const kout::UnknownColumn& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
