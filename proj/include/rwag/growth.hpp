#ifndef RWAG_GROWTH_HPP
#define RWAG_GROWTH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rwag/graph.hpp"
#include "rwag/rng.hpp"

namespace rwag {

enum class RuleKind { FixedWalk, BernoulliWalk, Preferential, Uniform };

// Attachment mechanism. Draw order is fixed per rule:
//   FixedWalk(l):     one draw for V, then one per walk step.
//   BernoulliWalk(p): one draw for X (0 w.p. p, else 1), then as FixedWalk(X).
//   Preferential:     one draw (uniform half-edge).
//   Uniform:          one draw for V; identical in law to FixedWalk(0).
struct GrowthRule {
  RuleKind kind = RuleKind::FixedWalk;
  std::int64_t walk_length = 1;  // FixedWalk only
  double p = 0.0;                // BernoulliWalk only

  static GrowthRule fixed_walk(std::int64_t length);
  static GrowthRule bernoulli_walk(double p);
  static GrowthRule preferential();
  static GrowthRule uniform();

  std::string describe() const;
};

// Per-step record: initially chosen vertex, realized walk length, walk
// destination, and the id of the vertex that was attached. For Preferential
// and Uniform, v == w and realized_length == 0 by convention.
struct StepTrace {
  std::int64_t step_index = 0;
  VertexId v = 0;
  std::int64_t realized_length = 0;
  VertexId w = 0;
  VertexId new_vertex = -1;
};

// Choose the attachment target for one step; fills everything but new_vertex.
StepTrace select_target(const Graph& g, const GrowthRule& rule,
                        SplitMix64& rng);

using StepObserver = std::function<void(const Graph&, const StepTrace&)>;

// Apply `steps` growth steps to g in place. The observer (if any) runs after
// each attach with the post-step graph. Deterministic given (g, rule, steps,
// rng state).
void grow(Graph& g, const GrowthRule& rule, std::int64_t steps,
          SplitMix64& rng, const StepObserver& on_step = nullptr);

// Convenience wrapper that collects the full trace.
std::vector<StepTrace> grow_traced(Graph& g, const GrowthRule& rule,
                                   std::int64_t steps, SplitMix64& rng);

struct LeafTransitionVerdict {
  bool ok = true;
  std::string violation;  // names the failed clause when !ok
};

// Checks the per-step leaf bookkeeping for a FixedWalk(1) step on a non-star
// graph: if V was a leaf the leaf count must rise by exactly one, and the
// change is at most one in absolute value in every case.
LeafTransitionVerdict leaf_transition_check(const Graph& before,
                                            const StepTrace& trace,
                                            const Graph& after);

}  // namespace rwag

#endif  // RWAG_GROWTH_HPP
