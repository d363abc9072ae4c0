#include "rwag/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rwag/errors.hpp"

namespace rwag {

std::vector<std::int64_t> checkpoint_schedule(std::int64_t total_steps) {
  if (total_steps < 1) {
    throw ValidationError("checkpoint_schedule: total_steps must be >= 1");
  }
  std::vector<std::int64_t> schedule;
  for (std::int64_t p = 1; p <= total_steps && p > 0; p *= 2) {
    schedule.push_back(p);
  }
  if (schedule.empty() || schedule.back() != total_steps) {
    schedule.push_back(total_steps);
  }
  return schedule;
}

namespace {

CheckpointStats moments(std::int64_t n, std::span<const double> xs) {
  CheckpointStats cs;
  cs.n = n;
  cs.replicas = static_cast<std::int64_t>(xs.size());
  double sum = 0.0;
  cs.min = std::numeric_limits<double>::infinity();
  cs.max = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    sum += x;
    cs.min = std::min(cs.min, x);
    cs.max = std::max(cs.max, x);
  }
  cs.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) {
    cs.variance = std::numeric_limits<double>::quiet_NaN();
    cs.se = std::numeric_limits<double>::quiet_NaN();
    return cs;
  }
  double ss = 0.0;
  for (double x : xs) ss += (x - cs.mean) * (x - cs.mean);
  cs.variance = ss / static_cast<double>(xs.size() - 1);
  cs.se = std::sqrt(cs.variance / static_cast<double>(xs.size()));
  return cs;
}

}  // namespace

EnsembleSummary aggregate(
    const std::vector<std::vector<TrajectoryRecord>>& replicas,
    bool keep_samples) {
  if (replicas.empty()) throw ValidationError("aggregate: no replicas");
  const auto& first = replicas.front();
  EnsembleSummary summary;
  for (const auto& rec : first) summary.checkpoints.push_back(rec.n);
  for (const auto& rep : replicas) {
    if (rep.size() != first.size()) {
      throw ValidationError("aggregate: mismatched checkpoint schedules");
    }
    for (std::size_t i = 0; i < rep.size(); ++i) {
      if (rep[i].n != first[i].n) {
        throw ValidationError("aggregate: mismatched checkpoint schedules");
      }
    }
  }

  std::vector<std::string> observables;
  if (first.front().leaf_count >= 0) observables.push_back("L");
  if (first.front().red_prop.has_value()) observables.push_back("R");
  for (std::size_t c = 0; c < first.front().color_counts.size(); ++c) {
    observables.push_back("prop_c" + std::to_string(c));
  }

  auto value_of = [](const TrajectoryRecord& rec, const std::string& name) {
    if (name == "L") return rec.leaf_prop;
    if (name == "R") return rec.red_prop.value();
    std::size_t c = std::stoul(name.substr(6));
    return static_cast<double>(rec.color_counts[c]) /
           static_cast<double>(rec.vertex_count);
  };

  for (const auto& name : observables) {
    std::vector<CheckpointStats> per_cp;
    std::vector<std::vector<double>> raw;
    for (std::size_t i = 0; i < first.size(); ++i) {
      std::vector<double> xs;
      xs.reserve(replicas.size());
      for (const auto& rep : replicas) xs.push_back(value_of(rep[i], name));
      per_cp.push_back(moments(first[i].n, xs));
      if (keep_samples) raw.push_back(std::move(xs));
    }
    summary.stats[name] = std::move(per_cp);
    if (keep_samples) summary.samples[name] = std::move(raw);
  }
  return summary;
}

namespace {

// Asymptotic Kolmogorov survival function Q(x) = 2 sum (-1)^{k-1} e^{-2k^2x^2}.
double kolmogorov_q(double x) {
  if (x < 1e-8) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    double term = sign * std::exp(-2.0 * k * k * x * x);
    sum += term;
    if (std::abs(term) < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

KsResult two_sample_ks(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw ValidationError("two_sample_ks: empty sample");
  }
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double na = static_cast<double>(sa.size());
  double nb = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  KsResult res;
  res.statistic = d;
  double ne = na * nb / (na + nb);
  res.p_value = kolmogorov_q(std::sqrt(ne) * d);
  return res;
}

double nonleaf_mean_degree(const Graph& g) {
  std::int64_t nonleaves = g.vertex_count() - g.leaf_count();
  if (nonleaves == 0) {
    throw ValidationError("nonleaf_mean_degree: every vertex is a leaf");
  }
  std::int64_t degree_sum = 2 * g.edge_count();
  return static_cast<double>(degree_sum - g.leaf_count()) /
         static_cast<double>(nonleaves);
}

double nonleaf_mean_degree_closed_form(double leaf_prop, std::int64_t n,
                                       std::int64_t v0, std::int64_t e0) {
  double one_minus = 1.0 - leaf_prop;
  return (2.0 - leaf_prop) / one_minus +
         2.0 * static_cast<double>(e0 - v0) /
             (static_cast<double>(n + v0) * one_minus);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace rwag
