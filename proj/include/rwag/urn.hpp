#ifndef RWAG_URN_HPP
#define RWAG_URN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rwag/rng.hpp"

namespace rwag {

struct UrnState {
  std::int64_t red = 0;
  std::int64_t blue = 0;

  std::int64_t total() const { return red + blue; }
  double red_fraction() const {
    return static_cast<double>(red) / static_cast<double>(total());
  }
};

// Polya: return the drawn ball plus one of the same color.
// Friedman01: return the drawn ball plus one of the opposite color.
enum class UrnRule { Polya, Friedman01 };

UrnState urn_step(UrnState s, UrnRule rule, SplitMix64& rng);

// Run `steps` draws and record red fractions at the given checkpoint step
// indices (1-based step counts, ascending).
std::vector<double> urn_run(UrnState s0, UrnRule rule, std::int64_t steps,
                            std::span<const std::int64_t> checkpoints,
                            SplitMix64& rng);

// Exact distribution of the number of red balls added after `steps` Polya
// draws, via dense DP. steps is capped at 1000.
std::vector<double> exact_polya_pmf(UrnState s0, std::int64_t steps);

}  // namespace rwag

#endif  // RWAG_URN_HPP
