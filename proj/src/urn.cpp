#include "rwag/urn.hpp"

#include "rwag/errors.hpp"

namespace rwag {

UrnState urn_step(UrnState s, UrnRule rule, SplitMix64& rng) {
  if (s.total() < 1 || s.red < 0 || s.blue < 0) {
    throw ValidationError("urn_step: urn must hold at least one ball");
  }
  bool drew_red =
      static_cast<std::int64_t>(rng.next_below(s.total())) < s.red;
  switch (rule) {
    case UrnRule::Polya:
      if (drew_red) ++s.red; else ++s.blue;
      break;
    case UrnRule::Friedman01:
      if (drew_red) ++s.blue; else ++s.red;
      break;
  }
  return s;
}

std::vector<double> urn_run(UrnState s0, UrnRule rule, std::int64_t steps,
                            std::span<const std::int64_t> checkpoints,
                            SplitMix64& rng) {
  std::vector<double> fractions;
  fractions.reserve(checkpoints.size());
  UrnState s = s0;
  std::size_t next_cp = 0;
  for (std::int64_t n = 1; n <= steps; ++n) {
    s = urn_step(s, rule, rng);
    while (next_cp < checkpoints.size() && checkpoints[next_cp] == n) {
      fractions.push_back(s.red_fraction());
      ++next_cp;
    }
  }
  return fractions;
}

std::vector<double> exact_polya_pmf(UrnState s0, std::int64_t steps) {
  if (s0.red < 1 || s0.blue < 1) {
    throw ValidationError("exact_polya_pmf: both colors must start >= 1");
  }
  if (steps < 0 || steps > 1000) {
    throw ValidationError("exact_polya_pmf: steps must lie in [0, 1000]");
  }
  // After t draws with j reds added: red = r0+j, total = r0+b0+t, so the state
  // probability depends on j alone.
  std::vector<double> pmf(1, 1.0);
  for (std::int64_t t = 0; t < steps; ++t) {
    std::vector<double> next(t + 2, 0.0);
    double total = static_cast<double>(s0.total() + t);
    for (std::int64_t j = 0; j <= t; ++j) {
      double p_red = static_cast<double>(s0.red + j) / total;
      next[j + 1] += pmf[j] * p_red;
      next[j] += pmf[j] * (1.0 - p_red);
    }
    pmf = std::move(next);
  }
  return pmf;
}

}  // namespace rwag
