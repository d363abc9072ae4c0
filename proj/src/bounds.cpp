#include "rwag/bounds.hpp"

#include <cmath>
#include <string>

#include "rwag/errors.hpp"

namespace rwag {

double eq2_increment_bound(const std::map<std::int64_t, double>& hist_prop,
                           std::int64_t n, std::int64_t v0) {
  double total = 0.0;
  double sum = 0.0;
  for (auto [d, prop] : hist_prop) {
    if (prop < 0.0) {
      throw ValidationError("eq2_increment_bound: negative proportion at d=" +
                            std::to_string(d));
    }
    total += prop;
    if (d >= 2) sum += prop / static_cast<double>(d);
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("eq2_increment_bound: proportions must sum to 1");
  }
  return sum / static_cast<double>(n + v0 + 1);
}

double eq3_increment_bound(double leaf_prop, std::int64_t n, std::int64_t v0,
                           std::int64_t e0) {
  if (leaf_prop >= 1.0) {
    throw ValidationError("eq3_increment_bound: degenerate at L = 1");
  }
  double one_minus = 1.0 - leaf_prop;
  double mean_nonleaf_degree =
      (2.0 - leaf_prop) / one_minus +
      2.0 * static_cast<double>(e0 - v0) /
          (static_cast<double>(n + v0) * one_minus);
  return one_minus / (2.0 * static_cast<double>(n + 1)) /
         (2.0 * mean_nonleaf_degree);
}

double drift_lower_bernoulli(double lambda, double p) {
  double one_minus = 1.0 - lambda;
  return p * (1.0 - 2.0 * lambda) +
         (1.0 - p) * one_minus * one_minus / (4.0 * (2.0 - lambda));
}

double drift_upper_bernoulli(double lambda, double p) {
  return 1.0 - lambda * (1.0 + p);
}

double threshold_lower_root(double p) {
  return (1.0 + 9.0 * p - 2.0 * std::sqrt(8.0 * p * p + p)) / (1.0 + 7.0 * p);
}

double threshold_upper(double p) { return 1.0 / (1.0 + p); }

}  // namespace rwag
