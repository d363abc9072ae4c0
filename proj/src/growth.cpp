#include "rwag/growth.hpp"

#include <cmath>

#include "rwag/errors.hpp"

namespace rwag {

GrowthRule GrowthRule::fixed_walk(std::int64_t length) {
  if (length < 0) throw ValidationError("fixed_walk: length must be >= 0");
  GrowthRule r;
  r.kind = RuleKind::FixedWalk;
  r.walk_length = length;
  return r;
}

GrowthRule GrowthRule::bernoulli_walk(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("bernoulli_walk: p must lie in [0,1]");
  }
  GrowthRule r;
  r.kind = RuleKind::BernoulliWalk;
  r.p = p;
  return r;
}

GrowthRule GrowthRule::preferential() {
  GrowthRule r;
  r.kind = RuleKind::Preferential;
  return r;
}

GrowthRule GrowthRule::uniform() {
  GrowthRule r;
  r.kind = RuleKind::Uniform;
  return r;
}

std::string GrowthRule::describe() const {
  switch (kind) {
    case RuleKind::FixedWalk:
      return "fixed_walk(l=" + std::to_string(walk_length) + ")";
    case RuleKind::BernoulliWalk:
      return "bernoulli_walk(p=" + std::to_string(p) + ")";
    case RuleKind::Preferential:
      return "preferential";
    case RuleKind::Uniform:
      return "uniform";
  }
  return "?";
}

StepTrace select_target(const Graph& g, const GrowthRule& rule,
                        SplitMix64& rng) {
  StepTrace t;
  t.step_index = g.steps_taken();
  switch (rule.kind) {
    case RuleKind::FixedWalk: {
      t.v = uniform_vertex(g, rng);
      t.realized_length = rule.walk_length;
      t.w = random_walk(g, t.v, t.realized_length, rng);
      break;
    }
    case RuleKind::BernoulliWalk: {
      t.realized_length = rng.next_double() < rule.p ? 0 : 1;
      t.v = uniform_vertex(g, rng);
      t.w = random_walk(g, t.v, t.realized_length, rng);
      break;
    }
    case RuleKind::Preferential: {
      t.w = degree_proportional_vertex(g, rng);
      t.v = t.w;
      t.realized_length = 0;
      break;
    }
    case RuleKind::Uniform: {
      t.v = uniform_vertex(g, rng);
      t.w = t.v;
      t.realized_length = 0;
      break;
    }
  }
  return t;
}

void grow(Graph& g, const GrowthRule& rule, std::int64_t steps,
          SplitMix64& rng, const StepObserver& on_step) {
  for (std::int64_t i = 0; i < steps; ++i) {
    StepTrace t = select_target(g, rule, rng);
    t.new_vertex = g.attach_new_vertex(t.w);
    if (on_step) on_step(g, t);
  }
}

std::vector<StepTrace> grow_traced(Graph& g, const GrowthRule& rule,
                                   std::int64_t steps, SplitMix64& rng) {
  std::vector<StepTrace> trace;
  trace.reserve(steps);
  grow(g, rule, steps, rng,
       [&trace](const Graph&, const StepTrace& t) { trace.push_back(t); });
  return trace;
}

LeafTransitionVerdict leaf_transition_check(const Graph& before,
                                            const StepTrace& trace,
                                            const Graph& after) {
  LeafTransitionVerdict verdict;
  std::int64_t delta = after.leaf_count() - before.leaf_count();
  if (delta > 1 || delta < -1) {
    verdict.ok = false;
    verdict.violation = "leaf count changed by " + std::to_string(delta) +
                        " in one step (|delta| must be <= 1)";
    return verdict;
  }
  bool v_was_leaf = before.degree(trace.v) == 1;
  if (!before.is_star() && v_was_leaf && delta != 1) {
    verdict.ok = false;
    verdict.violation =
        "V was a leaf of a non-star graph but leaf count changed by " +
        std::to_string(delta) + " (expected +1)";
  }
  return verdict;
}

}  // namespace rwag
