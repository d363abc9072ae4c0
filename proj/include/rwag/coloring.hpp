#ifndef RWAG_COLORING_HPP
#define RWAG_COLORING_HPP

#include <cstdint>
#include <vector>

#include "rwag/graph.hpp"
#include "rwag/growth.hpp"

namespace rwag {

// Proper red/blue labelling of a bipartite graph, maintained incrementally
// during growth. red == true.
struct TwoColoring {
  std::vector<bool> color;  // true = red
  std::int64_t red_count = 0;

  bool is_red(VertexId v) const { return color[v]; }
  double red_fraction() const {
    return static_cast<double>(red_count) /
           static_cast<double>(color.size());
  }
};

// BFS 2-coloring; the lowest-id vertex of each component is red. Throws
// ValidationError on an odd cycle.
TwoColoring bipartite_2color(const Graph& g);

// Color the newly attached vertex opposite to its attachment target.
void propagate_color_2(TwoColoring& coloring, const StepTrace& trace);

// Audit: every edge joins opposite colors and red_count is exact.
void check_proper_2coloring(const Graph& g, const TwoColoring& coloring);

// k-color labelling for the directed variant: every edge goes from color i
// to color (i+1) mod k.
struct KColoring {
  std::int64_t k = 2;
  std::vector<std::int64_t> color;
  std::vector<std::int64_t> counts;

  double proportion(std::int64_t c) const {
    return static_cast<double>(counts[c]) /
           static_cast<double>(color.size());
  }
};

// Initial coloring of the directed k-cycle (color(i) = i mod k). Validates
// the edge-color constraint; n must be a multiple of k.
KColoring kcolor_cycle(const DirectedGraph& g, std::int64_t k);

// One growth step of the directed variant: V uniform, walk `length` steps
// along out-edges to W, new vertex colored (color(W) - 1) mod k with edge
// new -> W.
void kcolor_grow_step(DirectedGraph& g, KColoring& coloring,
                      std::int64_t length, SplitMix64& rng);

// Audit the directed edge-color constraint.
void check_kcoloring(const DirectedGraph& g, const KColoring& coloring);

}  // namespace rwag

#endif  // RWAG_COLORING_HPP
