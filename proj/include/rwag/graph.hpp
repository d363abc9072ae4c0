#ifndef RWAG_GRAPH_HPP
#define RWAG_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rwag/rng.hpp"

namespace rwag {

using VertexId = std::int64_t;

// Dynamic undirected simple graph grown one vertex-plus-edge at a time.
// Vertex ids are dense integers in creation order; the initial graph gets
// 0..v0-1. The half-edge list holds each vertex id degree-many times and is
// the degree-proportional sampler.
class Graph {
 public:
  Graph() = default;

  std::int64_t vertex_count() const {
    return static_cast<std::int64_t>(degree_.size());
  }
  std::int64_t edge_count() const { return e0_ + steps_taken_; }
  std::int64_t initial_vertices() const { return v0_; }
  std::int64_t initial_edges() const { return e0_; }
  std::int64_t steps_taken() const { return steps_taken_; }
  std::int64_t leaf_count() const { return leaf_count_; }

  std::int64_t degree(VertexId v) const { return degree_[v]; }
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adjacency_[v];
  }
  const std::vector<VertexId>& half_edges() const { return half_edges_; }

  // Attach a brand-new degree-1 vertex to `target`; returns its id.
  VertexId attach_new_vertex(VertexId target);

  bool is_star() const;
  std::map<std::int64_t, std::int64_t> degree_histogram() const;

  // Full structural audit (degree sum, half-edge multiset, leaf count).
  // Throws InvariantViolation on failure.
  void audit() const;

  // Only build_g0 / generators construct graphs, so invariants hold from birth.
  static Graph from_edges(std::int64_t vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& edges);

 private:
  std::int64_t v0_ = 0;
  std::int64_t e0_ = 0;
  std::int64_t steps_taken_ = 0;
  std::int64_t leaf_count_ = 0;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::int64_t> degree_;
  std::vector<VertexId> half_edges_;
};

// G0 generators.
Graph make_path(std::int64_t n);              // n >= 2 vertices
Graph make_cycle(std::int64_t n);             // n >= 3
Graph make_star(std::int64_t leaves);         // center + leaves, leaves >= 2
Graph make_complete_bipartite(std::int64_t r, std::int64_t b);

// Edge-list file: one edge per line, two 0-indexed integers separated by one
// space, vertex count = max id + 1. Rejects self-loops, duplicate edges,
// isolated vertices, empty graphs.
Graph load_edge_list(const std::string& path);

// Parse a G0 spec string: "path(4)", "cycle(6)", "star(5)",
// "complete_bipartite(2,3)", or "file:PATH".
Graph build_g0(const std::string& spec);

// Sampling primitives.
VertexId uniform_vertex(const Graph& g, SplitMix64& rng);
VertexId random_walk(const Graph& g, VertexId start, std::int64_t length,
                     SplitMix64& rng);
VertexId degree_proportional_vertex(const Graph& g, SplitMix64& rng);

// Directed graph for the k-color generalisation: each vertex keeps its
// out-neighbors, every vertex has out-degree >= 1.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  std::int64_t vertex_count() const {
    return static_cast<std::int64_t>(out_adjacency_.size());
  }
  std::int64_t edge_count() const { return e0_ + steps_taken_; }
  std::int64_t initial_vertices() const { return v0_; }
  std::int64_t steps_taken() const { return steps_taken_; }
  std::int64_t out_degree(VertexId v) const {
    return static_cast<std::int64_t>(out_adjacency_[v].size());
  }
  const std::vector<VertexId>& out_neighbors(VertexId v) const {
    return out_adjacency_[v];
  }

  // New vertex with a single out-edge to `target`.
  VertexId attach_new_vertex(VertexId target);

  static DirectedGraph from_edges(
      std::int64_t vertex_count,
      const std::vector<std::pair<VertexId, VertexId>>& edges);

 private:
  std::int64_t v0_ = 0;
  std::int64_t e0_ = 0;
  std::int64_t steps_taken_ = 0;
  std::vector<std::vector<VertexId>> out_adjacency_;
};

// Directed n-cycle 0 -> 1 -> ... -> n-1 -> 0.
DirectedGraph make_directed_cycle(std::int64_t n);

VertexId uniform_vertex(const DirectedGraph& g, SplitMix64& rng);
VertexId directed_random_walk(const DirectedGraph& g, VertexId start,
                              std::int64_t length, SplitMix64& rng);

}  // namespace rwag

#endif  // RWAG_GRAPH_HPP
