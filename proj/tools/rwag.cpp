// rwag: random-walk attachment graph experiments.
//
// Subcommands:
//   grow          one replica, trajectory recorded at every step
//   ensemble      many replicas, checkpointed summaries
//   urn           Polya / Friedman urn oracle ensembles
//   bounds-table  CSV of the Bernoulli drift thresholds over a p grid
//   validate      build and check a G0 spec, then exit

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rwag/bounds.hpp"
#include "rwag/errors.hpp"
#include "rwag/experiment.hpp"
#include "rwag/graph.hpp"

namespace {

struct CliState {
  rwag::ExperimentConfig cfg;
  std::string config_path;
  std::string coloring = "off";
};

void add_common_flags(CLI::App* cmd, CliState& st) {
  cmd->add_option("--config", st.config_path,
                  "JSON config file; flags given here override file values");
  cmd->add_option("--g0", st.cfg.g0,
                  "initial graph: path(n), cycle(n), star(k), "
                  "complete_bipartite(r,b), file:PATH");
  cmd->add_option("--rule", st.cfg.rule,
                  "fixed_walk | bernoulli_walk | preferential | uniform");
  cmd->add_option("--l", st.cfg.walk_length, "walk length for fixed_walk");
  cmd->add_option("--p", st.cfg.p, "P(walk length = 0) for bernoulli_walk");
  cmd->add_option("--steps", st.cfg.steps, "growth steps per replica");
  cmd->add_option("--replicas", st.cfg.replicas, "ensemble size");
  cmd->add_option("--seed", st.cfg.master_seed, "master seed (64-bit)");
  cmd->add_option("--coloring", st.coloring, "off | bipartite | kcolor");
  cmd->add_option("--k", st.cfg.k, "number of colors for kcolor");
  cmd->add_option("--out", st.cfg.out_dir, "output directory");
  cmd->add_flag("--keep-samples", st.cfg.keep_samples,
                "retain raw per-replica samples");
  cmd->add_flag("--degree-snapshots", st.cfg.degree_snapshots,
                "write degree histograms at checkpoints");
  cmd->add_flag("--audit", st.cfg.audit, "full structural audit every step");
  cmd->add_option("--threads", st.cfg.threads,
                  "worker threads (env RWA_THREADS as fallback)");
}

rwag::ColoringMode parse_coloring(const std::string& c) {
  if (c == "off") return rwag::ColoringMode::Off;
  if (c == "bipartite") return rwag::ColoringMode::Bipartite;
  if (c == "kcolor") return rwag::ColoringMode::KColor;
  throw rwag::ValidationError("coloring: unknown value '" + c + "'");
}

bool flag_given(const CLI::App* cmd, const std::string& name) {
  const CLI::Option* opt =
      const_cast<CLI::App*>(cmd)->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

// Config file values fill in everything the user did not pass explicitly.
rwag::ExperimentConfig merge_with_file(const CLI::App* cmd,
                                       const CliState& st) {
  rwag::ExperimentConfig cfg = rwag::parse_config_file(st.config_path);
  if (flag_given(cmd, "--g0")) cfg.g0 = st.cfg.g0;
  if (flag_given(cmd, "--rule")) cfg.rule = st.cfg.rule;
  if (flag_given(cmd, "--l")) cfg.walk_length = st.cfg.walk_length;
  if (flag_given(cmd, "--p")) cfg.p = st.cfg.p;
  if (flag_given(cmd, "--steps")) cfg.steps = st.cfg.steps;
  if (flag_given(cmd, "--replicas")) cfg.replicas = st.cfg.replicas;
  if (flag_given(cmd, "--seed")) cfg.master_seed = st.cfg.master_seed;
  if (flag_given(cmd, "--coloring")) cfg.coloring = parse_coloring(st.coloring);
  if (flag_given(cmd, "--k")) cfg.k = st.cfg.k;
  if (flag_given(cmd, "--out")) cfg.out_dir = st.cfg.out_dir;
  if (flag_given(cmd, "--keep-samples")) cfg.keep_samples = st.cfg.keep_samples;
  if (flag_given(cmd, "--degree-snapshots")) {
    cfg.degree_snapshots = st.cfg.degree_snapshots;
  }
  if (flag_given(cmd, "--audit")) cfg.audit = st.cfg.audit;
  if (flag_given(cmd, "--threads")) cfg.threads = st.cfg.threads;
  if (flag_given(cmd, "--urn-red")) cfg.urn_red = st.cfg.urn_red;
  if (flag_given(cmd, "--urn-blue")) cfg.urn_blue = st.cfg.urn_blue;
  if (flag_given(cmd, "--urn-rule")) cfg.urn_rule = st.cfg.urn_rule;
  return cfg;
}

int run(int argc, char** argv) {
  CLI::App app{"random-walk attachment graph experiments"};
  app.require_subcommand(1);

  CliState st;
  if (const char* env = std::getenv("RWA_THREADS")) {
    st.cfg.threads = std::max(1L, std::atol(env));
  }

  auto* grow_cmd =
      app.add_subcommand("grow", "single replica, full trajectory");
  auto* ens_cmd = app.add_subcommand("ensemble", "replica ensemble summaries");
  auto* urn_cmd = app.add_subcommand("urn", "urn oracle ensemble");
  for (CLI::App* cmd : {grow_cmd, ens_cmd, urn_cmd}) {
    add_common_flags(cmd, st);
  }
  urn_cmd->add_option("--urn-red", st.cfg.urn_red, "initial red balls");
  urn_cmd->add_option("--urn-blue", st.cfg.urn_blue, "initial blue balls");
  urn_cmd->add_option("--urn-rule", st.cfg.urn_rule, "polya | friedman01");

  auto* bounds_cmd =
      app.add_subcommand("bounds-table", "drift thresholds over a p grid");
  double p_start = 0.0, p_stop = 1.0, p_step = 0.05;
  std::string bounds_out = "-";
  bounds_cmd->add_option("--p-start", p_start, "grid start");
  bounds_cmd->add_option("--p-stop", p_stop, "grid stop (inclusive)");
  bounds_cmd->add_option("--p-step", p_step, "grid step");
  bounds_cmd->add_option("--out", bounds_out, "output file, or - for stdout");

  auto* validate_cmd = app.add_subcommand("validate", "check a G0 spec");
  std::string validate_g0 = "path(4)";
  validate_cmd->add_option("--g0", validate_g0, "g0 spec to validate");

  CLI11_PARSE(app, argc, argv);

  if (*validate_cmd) {
    rwag::Graph g = rwag::build_g0(validate_g0);
    g.audit();
    std::cout << "ok: " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges, " << g.leaf_count() << " leaves\n";
    return 0;
  }

  if (*bounds_cmd) {
    if (p_step <= 0.0) throw rwag::ValidationError("p-step: must be > 0");
    std::vector<double> grid;
    for (double p = p_start; p <= p_stop + 1e-12; p += p_step) {
      grid.push_back(std::min(p, p_stop));
    }
    std::string csv = rwag::bounds_table_csv(grid);
    if (bounds_out == "-") {
      std::cout << csv;
    } else {
      rwag::write_file_atomic(bounds_out, csv);
    }
    return 0;
  }

  CLI::App* active = *grow_cmd ? grow_cmd : (*urn_cmd ? urn_cmd : ens_cmd);
  rwag::ExperimentConfig cfg =
      st.config_path.empty() ? st.cfg : merge_with_file(active, st);
  if (st.config_path.empty() && flag_given(active, "--coloring")) {
    cfg.coloring = parse_coloring(st.coloring);
  }
  cfg.mode = *grow_cmd ? rwag::RunMode::Grow
                       : (*urn_cmd ? rwag::RunMode::Urn
                                   : rwag::RunMode::Ensemble);
  if (cfg.mode == rwag::RunMode::Grow) cfg.replicas = 1;

  rwag::run_experiment(cfg);
  std::cout << "wrote " << cfg.out_dir << "/trajectory.csv and summary.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rwag::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rwag::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const rwag::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
