#include "rwag/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "rwag/bounds.hpp"
#include "rwag/coloring.hpp"
#include "rwag/errors.hpp"
#include "rwag/rng.hpp"

namespace rwag {

GrowthRule ExperimentConfig::growth_rule() const {
  if (rule == "fixed_walk") return GrowthRule::fixed_walk(walk_length);
  if (rule == "bernoulli_walk") return GrowthRule::bernoulli_walk(p);
  if (rule == "preferential") return GrowthRule::preferential();
  if (rule == "uniform") return GrowthRule::uniform();
  throw ValidationError("rule: unknown value '" + rule + "'");
}

void ExperimentConfig::validate() const {
  if (steps < 1) throw ValidationError("steps: must be >= 1");
  if (replicas < 1) throw ValidationError("replicas: must be >= 1");
  if (threads < 1) throw ValidationError("threads: must be >= 1");
  if (walk_length < 0) throw ValidationError("l: must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("p: probability out of range [0,1]");
  }
  if (mode == RunMode::Urn) {
    if (urn_red < 1 || urn_blue < 1) {
      throw ValidationError("urn_red/urn_blue: must be >= 1");
    }
    if (urn_rule != "polya" && urn_rule != "friedman01") {
      throw ValidationError("urn_rule: unknown value '" + urn_rule + "'");
    }
    return;
  }
  growth_rule();  // validates rule
  if (coloring == ColoringMode::KColor) {
    if (k < 2) throw ValidationError("k: must be >= 2");
    if (rule != "fixed_walk") {
      throw ValidationError("coloring=kcolor requires rule=fixed_walk");
    }
    if (g0.rfind("cycle(", 0) != 0) {
      throw ValidationError(
          "coloring=kcolor requires a cycle(n) g0 (directed k-cycle)");
    }
    // Construct once to surface structural errors here.
    auto n = std::stoll(g0.substr(6));
    auto dg = make_directed_cycle(n);
    kcolor_cycle(dg, k);
  } else {
    Graph g = build_g0(g0);
    if (coloring == ColoringMode::Bipartite) bipartite_2color(g);
  }
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("config parse error: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ValidationError("config: expected a JSON object");

  ExperimentConfig cfg;
  for (auto& [key, value] : doc.items()) {
    try {
      if (key == "mode") {
        std::string m = value.get<std::string>();
        if (m == "grow") cfg.mode = RunMode::Grow;
        else if (m == "ensemble") cfg.mode = RunMode::Ensemble;
        else if (m == "urn") cfg.mode = RunMode::Urn;
        else throw ValidationError("mode: unknown value '" + m + "'");
      } else if (key == "g0") cfg.g0 = value.get<std::string>();
      else if (key == "rule") cfg.rule = value.get<std::string>();
      else if (key == "l") cfg.walk_length = value.get<std::int64_t>();
      else if (key == "p") cfg.p = value.get<double>();
      else if (key == "steps") cfg.steps = value.get<std::int64_t>();
      else if (key == "replicas") cfg.replicas = value.get<std::int64_t>();
      else if (key == "seed") cfg.master_seed = value.get<std::uint64_t>();
      else if (key == "coloring") {
        std::string c = value.get<std::string>();
        if (c == "off") cfg.coloring = ColoringMode::Off;
        else if (c == "bipartite") cfg.coloring = ColoringMode::Bipartite;
        else if (c == "kcolor") cfg.coloring = ColoringMode::KColor;
        else throw ValidationError("coloring: unknown value '" + c + "'");
      } else if (key == "k") cfg.k = value.get<std::int64_t>();
      else if (key == "keep_samples") cfg.keep_samples = value.get<bool>();
      else if (key == "degree_snapshots")
        cfg.degree_snapshots = value.get<bool>();
      else if (key == "audit") cfg.audit = value.get<bool>();
      else if (key == "out") cfg.out_dir = value.get<std::string>();
      else if (key == "threads") cfg.threads = value.get<std::int64_t>();
      else if (key == "urn_red") cfg.urn_red = value.get<std::int64_t>();
      else if (key == "urn_blue") cfg.urn_blue = value.get<std::int64_t>();
      else if (key == "urn_rule") cfg.urn_rule = value.get<std::string>();
      else throw ValidationError("config: unknown key '" + key + "'");
    } catch (const nlohmann::json::exception&) {
      throw ValidationError("config: bad value for key '" + key + "'");
    }
  }
  return cfg;
}

namespace {

std::vector<TrajectoryRecord> run_urn_replica(
    const ExperimentConfig& cfg, std::uint64_t seed,
    const std::vector<std::int64_t>& checkpoints) {
  SplitMix64 rng(seed);
  UrnState s{cfg.urn_red, cfg.urn_blue};
  UrnRule rule =
      cfg.urn_rule == "polya" ? UrnRule::Polya : UrnRule::Friedman01;
  std::vector<TrajectoryRecord> records;
  records.reserve(checkpoints.size());
  std::size_t next_cp = 0;
  for (std::int64_t n = 1; n <= cfg.steps; ++n) {
    s = urn_step(s, rule, rng);
    while (next_cp < checkpoints.size() && checkpoints[next_cp] == n) {
      TrajectoryRecord rec;
      rec.n = n;
      rec.vertex_count = s.total();
      rec.edge_count = 0;
      rec.leaf_count = -1;  // leaf tracking not applicable
      rec.red_count = s.red;
      rec.red_prop = s.red_fraction();
      records.push_back(std::move(rec));
      ++next_cp;
    }
  }
  return records;
}

std::vector<TrajectoryRecord> run_kcolor_replica(
    const ExperimentConfig& cfg, std::uint64_t seed,
    const std::vector<std::int64_t>& checkpoints) {
  SplitMix64 rng(seed);
  auto n0 = std::stoll(cfg.g0.substr(6));
  DirectedGraph g = make_directed_cycle(n0);
  KColoring coloring = kcolor_cycle(g, cfg.k);
  std::vector<TrajectoryRecord> records;
  records.reserve(checkpoints.size());
  std::size_t next_cp = 0;
  for (std::int64_t n = 1; n <= cfg.steps; ++n) {
    kcolor_grow_step(g, coloring, cfg.walk_length, rng);
    if (cfg.audit) check_kcoloring(g, coloring);
    while (next_cp < checkpoints.size() && checkpoints[next_cp] == n) {
      TrajectoryRecord rec;
      rec.n = n;
      rec.vertex_count = g.vertex_count();
      rec.edge_count = g.edge_count();
      rec.leaf_count = -1;
      rec.color_counts = coloring.counts;
      records.push_back(std::move(rec));
      ++next_cp;
    }
  }
  return records;
}

}  // namespace

std::vector<TrajectoryRecord> run_replica(
    const ExperimentConfig& cfg, std::uint64_t seed,
    const std::vector<std::int64_t>& checkpoints) {
  if (cfg.mode == RunMode::Urn) return run_urn_replica(cfg, seed, checkpoints);
  if (cfg.coloring == ColoringMode::KColor) {
    return run_kcolor_replica(cfg, seed, checkpoints);
  }

  SplitMix64 rng(seed);
  Graph g = build_g0(cfg.g0);
  TwoColoring coloring;
  bool track_color = cfg.coloring == ColoringMode::Bipartite;
  if (track_color) coloring = bipartite_2color(g);

  std::vector<TrajectoryRecord> records;
  records.reserve(checkpoints.size());
  std::size_t next_cp = 0;
  GrowthRule rule = cfg.growth_rule();
  grow(g, rule, cfg.steps, rng,
       [&](const Graph& gg, const StepTrace& t) {
         if (track_color) propagate_color_2(coloring, t);
         if (cfg.audit) {
           gg.audit();
           if (track_color) check_proper_2coloring(gg, coloring);
         }
         std::int64_t n = gg.steps_taken();
         while (next_cp < checkpoints.size() && checkpoints[next_cp] == n) {
           TrajectoryRecord rec;
           rec.n = n;
           rec.vertex_count = gg.vertex_count();
           rec.edge_count = gg.edge_count();
           rec.leaf_count = gg.leaf_count();
           rec.leaf_prop = static_cast<double>(gg.leaf_count()) /
                           static_cast<double>(gg.vertex_count());
           if (track_color) {
             rec.red_count = coloring.red_count;
             rec.red_prop = coloring.red_fraction();
           }
           if (cfg.degree_snapshots) rec.degree_hist = gg.degree_histogram();
           records.push_back(std::move(rec));
           ++next_cp;
         }
       });
  return records;
}

EnsembleResult run_ensemble(const ExperimentConfig& cfg) {
  cfg.validate();
  EnsembleResult result;
  if (cfg.mode == RunMode::Grow) {
    result.checkpoints.resize(cfg.steps);
    for (std::int64_t i = 0; i < cfg.steps; ++i) result.checkpoints[i] = i + 1;
  } else {
    result.checkpoints = checkpoint_schedule(cfg.steps);
  }

  result.replicas.resize(cfg.replicas);
  std::atomic<std::int64_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      std::int64_t i = cursor.fetch_add(1);
      if (i >= cfg.replicas) return;
      try {
        std::uint64_t seed = derive_replica_seed(cfg.master_seed,
                                                 static_cast<std::uint64_t>(i));
        result.replicas[i] = run_replica(cfg, seed, result.checkpoints);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        cursor.store(cfg.replicas);
        return;
      }
    }
  };

  std::int64_t nthreads = std::min<std::int64_t>(cfg.threads, cfg.replicas);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::int64_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.summary = aggregate(result.replicas, cfg.keep_samples);
  return result;
}

namespace {

void append_record_row(std::string& out, std::int64_t replica,
                       const TrajectoryRecord& rec) {
  out += std::to_string(replica);
  out += ',';
  out += std::to_string(rec.n);
  out += ',';
  out += std::to_string(rec.vertex_count);
  out += ',';
  out += std::to_string(rec.edge_count);
  out += ',';
  if (rec.leaf_count >= 0) {
    out += std::to_string(rec.leaf_count);
    out += ',';
    out += format_double(rec.leaf_prop);
  } else {
    out += ',';
  }
  out += ',';
  if (rec.red_count.has_value()) {
    out += std::to_string(*rec.red_count);
    out += ',';
    out += format_double(*rec.red_prop);
  } else {
    out += ',';
  }
  out += '\n';
}

}  // namespace

std::string trajectory_csv(
    const std::vector<std::vector<TrajectoryRecord>>& replicas) {
  std::string out = "replica,n,vertices,edges,leaves,L,red,R\n";
  for (std::size_t r = 0; r < replicas.size(); ++r) {
    for (const auto& rec : replicas[r]) {
      append_record_row(out, static_cast<std::int64_t>(r), rec);
    }
  }
  return out;
}

std::string summary_csv(const EnsembleSummary& summary) {
  std::string out = "n,observable,mean,variance,se,min,max,replicas\n";
  for (const auto& [name, per_cp] : summary.stats) {
    for (const auto& cs : per_cp) {
      out += std::to_string(cs.n);
      out += ',';
      out += name;
      out += ',';
      out += format_double(cs.mean);
      out += ',';
      out += format_double(cs.variance);
      out += ',';
      out += format_double(cs.se);
      out += ',';
      out += format_double(cs.min);
      out += ',';
      out += format_double(cs.max);
      out += ',';
      out += std::to_string(cs.replicas);
      out += '\n';
    }
  }
  return out;
}

std::string degrees_csv(
    const std::vector<std::vector<TrajectoryRecord>>& replicas) {
  std::string out = "replica,n,degree,count\n";
  for (std::size_t r = 0; r < replicas.size(); ++r) {
    for (const auto& rec : replicas[r]) {
      for (auto [d, c] : rec.degree_hist) {
        out += std::to_string(r);
        out += ',';
        out += std::to_string(rec.n);
        out += ',';
        out += std::to_string(d);
        out += ',';
        out += std::to_string(c);
        out += '\n';
      }
    }
  }
  return out;
}

std::string bounds_table_csv(const std::vector<double>& p_grid) {
  std::string out = "p,threshold_lower_root,threshold_upper,gap\n";
  for (double p : p_grid) {
    double lo = threshold_lower_root(p);
    double hi = threshold_upper(p);
    out += format_double(p);
    out += ',';
    out += format_double(lo);
    out += ',';
    out += format_double(hi);
    out += ',';
    out += format_double(hi - lo);
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp);
    out.write(contents.data(),
              static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + tmp + " -> " + path);
}

void run_experiment(const ExperimentConfig& cfg) {
  EnsembleResult result = run_ensemble(cfg);
  std::filesystem::path dir(cfg.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + cfg.out_dir);

  write_file_atomic((dir / "trajectory.csv").string(),
                    trajectory_csv(result.replicas));
  write_file_atomic((dir / "summary.csv").string(),
                    summary_csv(result.summary));
  if (cfg.degree_snapshots) {
    write_file_atomic((dir / "degrees.csv").string(),
                      degrees_csv(result.replicas));
  }
  if (cfg.coloring == ColoringMode::KColor) {
    std::string out = "replica,n,color,count\n";
    for (std::size_t r = 0; r < result.replicas.size(); ++r) {
      for (const auto& rec : result.replicas[r]) {
        for (std::size_t c = 0; c < rec.color_counts.size(); ++c) {
          out += std::to_string(r) + ',' + std::to_string(rec.n) + ',' +
                 std::to_string(c) + ',' +
                 std::to_string(rec.color_counts[c]) + '\n';
        }
      }
    }
    write_file_atomic((dir / "colors.csv").string(), out);
  }
}

}  // namespace rwag
