#include "rwag/coloring.hpp"

#include <deque>
#include <string>

#include "rwag/errors.hpp"

namespace rwag {

TwoColoring bipartite_2color(const Graph& g) {
  std::int64_t n = g.vertex_count();
  TwoColoring c;
  c.color.assign(n, false);
  std::vector<signed char> state(n, -1);  // -1 unvisited, 0 blue, 1 red
  for (VertexId root = 0; root < n; ++root) {
    if (state[root] != -1) continue;
    state[root] = 1;  // component anchor is red
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId v : g.neighbors(u)) {
        if (state[v] == -1) {
          state[v] = static_cast<signed char>(1 - state[u]);
          queue.push_back(v);
        } else if (state[v] == state[u]) {
          throw ValidationError(
              "graph is not bipartite (odd cycle through vertices " +
              std::to_string(u) + " and " + std::to_string(v) + ")");
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    c.color[v] = state[v] == 1;
    if (c.color[v]) ++c.red_count;
  }
  return c;
}

void propagate_color_2(TwoColoring& coloring, const StepTrace& trace) {
  bool fresh_is_red = !coloring.color[trace.w];
  coloring.color.push_back(fresh_is_red);
  if (fresh_is_red) ++coloring.red_count;
}

void check_proper_2coloring(const Graph& g, const TwoColoring& coloring) {
  if (static_cast<std::int64_t>(coloring.color.size()) != g.vertex_count()) {
    throw InvariantViolation("2-coloring size != vertex count");
  }
  std::int64_t reds = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (coloring.color[u]) ++reds;
    for (VertexId v : g.neighbors(u)) {
      if (coloring.color[u] == coloring.color[v]) {
        throw InvariantViolation("monochromatic edge " + std::to_string(u) +
                                 " " + std::to_string(v));
      }
    }
  }
  if (reds != coloring.red_count) {
    throw InvariantViolation("cached red_count stale");
  }
}

KColoring kcolor_cycle(const DirectedGraph& g, std::int64_t k) {
  if (k < 2) throw ValidationError("k-coloring requires k >= 2");
  if (g.vertex_count() % k != 0) {
    throw ValidationError(
        "directed cycle length must be a multiple of k for a valid coloring");
  }
  KColoring c;
  c.k = k;
  c.color.resize(g.vertex_count());
  c.counts.assign(k, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    c.color[v] = v % k;
    ++c.counts[v % k];
  }
  check_kcoloring(g, c);
  return c;
}

void kcolor_grow_step(DirectedGraph& g, KColoring& coloring,
                      std::int64_t length, SplitMix64& rng) {
  VertexId v = uniform_vertex(g, rng);
  VertexId w = directed_random_walk(g, v, length, rng);
  std::int64_t fresh_color = (coloring.color[w] - 1 + coloring.k) % coloring.k;
  g.attach_new_vertex(w);
  coloring.color.push_back(fresh_color);
  ++coloring.counts[fresh_color];
}

void check_kcoloring(const DirectedGraph& g, const KColoring& coloring) {
  if (static_cast<std::int64_t>(coloring.color.size()) != g.vertex_count()) {
    throw InvariantViolation("k-coloring size != vertex count");
  }
  std::vector<std::int64_t> counts(coloring.k, 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    ++counts[coloring.color[u]];
    for (VertexId v : g.out_neighbors(u)) {
      if (coloring.color[v] != (coloring.color[u] + 1) % coloring.k) {
        throw InvariantViolation("edge " + std::to_string(u) + " -> " +
                                 std::to_string(v) +
                                 " violates the color succession rule");
      }
    }
  }
  for (std::int64_t c = 0; c < coloring.k; ++c) {
    if (counts[c] != coloring.counts[c]) {
      throw InvariantViolation("cached color counts stale");
    }
  }
}

}  // namespace rwag
