#ifndef RWAG_STATS_HPP
#define RWAG_STATS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rwag/graph.hpp"

namespace rwag {

// Checkpointed observables of one replica at one step index.
struct TrajectoryRecord {
  std::int64_t n = 0;
  std::int64_t vertex_count = 0;
  std::int64_t edge_count = 0;
  std::int64_t leaf_count = 0;  // -1 when leaf tracking is not applicable
  double leaf_prop = 0.0;                         // L_n
  std::optional<std::int64_t> red_count;          // bipartite tracking
  std::optional<double> red_prop;                 // R_n
  std::vector<std::int64_t> color_counts;         // k-color tracking (empty otherwise)
  std::map<std::int64_t, std::int64_t> degree_hist;  // empty unless snapshotted
};

// Sample moments of one observable at one checkpoint.
struct CheckpointStats {
  std::int64_t n = 0;
  std::int64_t replicas = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; NaN for a single replica
  double se = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Per-observable per-checkpoint moments across an ensemble, with raw samples
// optionally retained for distributional tests.
struct EnsembleSummary {
  std::vector<std::int64_t> checkpoints;
  // observable name -> per-checkpoint stats (aligned with `checkpoints`)
  std::map<std::string, std::vector<CheckpointStats>> stats;
  // observable name -> [checkpoint][replica] raw values (only if retained)
  std::map<std::string, std::vector<std::vector<double>>> samples;
};

// Powers of two up to total_steps plus total_steps itself, ascending,
// deduplicated.
std::vector<std::int64_t> checkpoint_schedule(std::int64_t total_steps);

// Reduce replica trajectories to moments. All replicas must share the
// checkpoint schedule. Observables: L always; R when present; prop_c<i> when
// k-color counts are present.
EnsembleSummary aggregate(
    const std::vector<std::vector<TrajectoryRecord>>& replicas,
    bool keep_samples);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Two-sample Kolmogorov-Smirnov: statistic = sup |ECDF_a - ECDF_b|, p-value
// from the asymptotic Kolmogorov distribution at effective size
// n_a n_b / (n_a + n_b).
KsResult two_sample_ks(std::span<const double> a, std::span<const double> b);

// (degree sum - leaf count) / (non-leaf count). Throws when every vertex is
// a leaf.
double nonleaf_mean_degree(const Graph& g);

// The same quantity from the closed form in terms of (L, n, v0, e0).
double nonleaf_mean_degree_closed_form(double leaf_prop, std::int64_t n,
                                       std::int64_t v0, std::int64_t e0);

// Serialize a double with 17 significant digits.
std::string format_double(double x);

}  // namespace rwag

#endif  // RWAG_STATS_HPP
