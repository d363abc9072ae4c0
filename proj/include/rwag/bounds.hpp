#ifndef RWAG_BOUNDS_HPP
#define RWAG_BOUNDS_HPP

#include <cstdint>
#include <map>

namespace rwag {

// Closed-form drift bounds and thresholds for the leaf proportion. All
// functions are pure; they double as test oracles, so they evaluate the
// formulas exactly as written with no rearrangement.

// Per-step lower bound on the expected leaf increment from the degree
// histogram (proportions): sum over d >= 2 of p(d) / ((n + v0 + 1) d).
double eq2_increment_bound(const std::map<std::int64_t, double>& hist_prop,
                           std::int64_t n, std::int64_t v0);

// The coarser bound using only the leaf proportion L and the non-leaf mean
// degree: (1-L)/(2(n+1)) * [2((2-L)/(1-L) + 2(e0-v0)/((n+v0)(1-L)))]^{-1}.
// Throws on L == 1 (degenerate).
double eq3_increment_bound(double leaf_prop, std::int64_t n, std::int64_t v0,
                           std::int64_t e0);

// Leading-order drift bracket for the Bernoulli walk length (walk length 0
// w.p. p, else 1). The common 1/(n+v0+1) factor is excluded; callers scale.
double drift_lower_bernoulli(double lambda, double p);
double drift_upper_bernoulli(double lambda, double p);

// Roots of the two drift expressions in lambda.
double threshold_lower_root(double p);  // (1+9p-2*sqrt(8p^2+p))/(1+7p)
double threshold_upper(double p);       // 1/(1+p)

}  // namespace rwag

#endif  // RWAG_BOUNDS_HPP
