#ifndef RWAG_EXPERIMENT_HPP
#define RWAG_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rwag/growth.hpp"
#include "rwag/stats.hpp"
#include "rwag/urn.hpp"

namespace rwag {

enum class RunMode { Grow, Ensemble, Urn };
enum class ColoringMode { Off, Bipartite, KColor };

struct ExperimentConfig {
  RunMode mode = RunMode::Ensemble;

  std::string g0 = "path(4)";
  std::string rule = "fixed_walk";
  std::int64_t walk_length = 1;
  double p = 0.0;
  std::int64_t steps = 1;
  std::int64_t replicas = 1;
  std::uint64_t master_seed = 0;

  ColoringMode coloring = ColoringMode::Off;
  std::int64_t k = 3;

  bool keep_samples = false;
  bool degree_snapshots = false;
  bool audit = false;  // full structural audit every step (slow)

  std::string out_dir = ".";
  std::int64_t threads = 1;

  // Urn mode.
  std::int64_t urn_red = 1;
  std::int64_t urn_blue = 1;
  std::string urn_rule = "polya";

  GrowthRule growth_rule() const;
  void validate() const;  // throws ValidationError naming the bad field
};

// Load a flat JSON config file. Unknown keys and malformed values are
// validation errors naming the key.
ExperimentConfig parse_config_file(const std::string& path);

// One replica of the configured model, recorded at the given checkpoints.
std::vector<TrajectoryRecord> run_replica(
    const ExperimentConfig& cfg, std::uint64_t seed,
    const std::vector<std::int64_t>& checkpoints);

struct EnsembleResult {
  std::vector<std::int64_t> checkpoints;
  std::vector<std::vector<TrajectoryRecord>> replicas;
  EnsembleSummary summary;
};

// Run all replicas (worker pool of cfg.threads) and aggregate. Results are
// identical for any thread count.
EnsembleResult run_ensemble(const ExperimentConfig& cfg);

// Run per cfg.mode and write CSV artifacts into cfg.out_dir (trajectory.csv,
// summary.csv, degrees.csv when snapshots are on). Files are written to a
// temp name and renamed.
void run_experiment(const ExperimentConfig& cfg);

// CSV writers (exposed for tests).
std::string trajectory_csv(
    const std::vector<std::vector<TrajectoryRecord>>& replicas);
std::string summary_csv(const EnsembleSummary& summary);
std::string degrees_csv(
    const std::vector<std::vector<TrajectoryRecord>>& replicas);
std::string bounds_table_csv(const std::vector<double>& p_grid);

void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace rwag

#endif  // RWAG_EXPERIMENT_HPP
