#include "rwag/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rwag/errors.hpp"

namespace rwag {

VertexId Graph::attach_new_vertex(VertexId target) {
  if (target < 0 || target >= vertex_count()) {
    throw ValidationError("attach_new_vertex: unknown target id " +
                          std::to_string(target));
  }
  VertexId fresh = vertex_count();
  adjacency_.emplace_back(std::vector<VertexId>{target});
  degree_.push_back(1);
  adjacency_[target].push_back(fresh);
  if (degree_[target] == 1) --leaf_count_;  // target stops being a leaf
  ++degree_[target];
  half_edges_.push_back(target);
  half_edges_.push_back(fresh);
  ++leaf_count_;  // the new vertex
  ++steps_taken_;
  return fresh;
}

bool Graph::is_star() const {
  std::int64_t n = vertex_count();
  if (n < 2) return false;
  std::int64_t centers = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (degree_[v] == n - 1) {
      ++centers;
    } else if (degree_[v] != 1) {
      return false;
    }
  }
  // n == 2 has both vertices of degree 1 == n-1; count that as a star.
  return n == 2 ? centers == 2 : centers == 1;
}

std::map<std::int64_t, std::int64_t> Graph::degree_histogram() const {
  std::map<std::int64_t, std::int64_t> hist;
  for (std::int64_t d : degree_) ++hist[d];
  return hist;
}

void Graph::audit() const {
  std::int64_t degree_sum = 0;
  std::int64_t leaves = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    degree_sum += degree_[v];
    if (degree_[v] == 1) ++leaves;
    if (static_cast<std::int64_t>(adjacency_[v].size()) != degree_[v]) {
      throw InvariantViolation("audit: adjacency/degree mismatch at vertex " +
                               std::to_string(v));
    }
  }
  if (degree_sum != 2 * (e0_ + steps_taken_)) {
    throw InvariantViolation("audit: degree sum != 2*(e0+steps)");
  }
  if (vertex_count() != v0_ + steps_taken_) {
    throw InvariantViolation("audit: vertex count != v0+steps");
  }
  if (leaves != leaf_count_) {
    throw InvariantViolation("audit: cached leaf count stale");
  }
  if (static_cast<std::int64_t>(half_edges_.size()) !=
      2 * (e0_ + steps_taken_)) {
    throw InvariantViolation("audit: half-edge list has wrong length");
  }
  std::vector<std::int64_t> seen(vertex_count(), 0);
  for (VertexId v : half_edges_) ++seen[v];
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (seen[v] != degree_[v]) {
      throw InvariantViolation(
          "audit: half-edge multiplicity != degree at vertex " +
          std::to_string(v));
    }
  }
}

Graph Graph::from_edges(
    std::int64_t vertex_count,
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (vertex_count <= 0) throw ValidationError("G0: empty graph");
  Graph g;
  g.v0_ = vertex_count;
  g.e0_ = static_cast<std::int64_t>(edges.size());
  g.adjacency_.resize(vertex_count);
  g.degree_.assign(vertex_count, 0);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw ValidationError("G0: edge endpoint out of range");
    }
    if (a == b) {
      throw ValidationError("G0: self-loop at vertex " + std::to_string(a));
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw ValidationError("G0: duplicate edge " + std::to_string(key.first) +
                            " " + std::to_string(key.second));
    }
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
    ++g.degree_[a];
    ++g.degree_[b];
    g.half_edges_.push_back(a);
    g.half_edges_.push_back(b);
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (g.degree_[v] == 0) {
      throw ValidationError("G0: isolated vertex " + std::to_string(v) +
                            " (degree 0)");
    }
    if (g.degree_[v] == 1) ++g.leaf_count_;
  }
  return g;
}

Graph make_path(std::int64_t n) {
  if (n < 2) throw ValidationError("path(n) requires n >= 2");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(std::int64_t n) {
  if (n < 3) throw ValidationError("cycle(n) requires n >= 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, edges);
}

Graph make_star(std::int64_t leaves) {
  if (leaves < 2) throw ValidationError("star(k) requires k >= 2 leaves");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph make_complete_bipartite(std::int64_t r, std::int64_t b) {
  if (r < 1 || b < 1) {
    throw ValidationError("complete_bipartite(r,b) requires r,b >= 1");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < r; ++i)
    for (VertexId j = 0; j < b; ++j) edges.emplace_back(i, r + j);
  return Graph::from_edges(r + b, edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path);
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexId max_id = -1;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    VertexId a, b;
    if (!(ls >> a >> b)) {
      throw ValidationError("edge list line " + std::to_string(lineno) +
                            ": expected two integers");
    }
    if (a < 0 || b < 0) {
      throw ValidationError("edge list line " + std::to_string(lineno) +
                            ": negative vertex id");
    }
    edges.emplace_back(a, b);
    max_id = std::max({max_id, a, b});
  }
  if (edges.empty()) throw ValidationError("edge list: empty graph");
  return Graph::from_edges(max_id + 1, edges);
}

Graph build_g0(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return load_edge_list(spec.substr(5));
  auto open = spec.find('(');
  auto close = spec.rfind(')');
  if (open == std::string::npos || close == std::string::npos ||
      close < open) {
    throw ValidationError("bad g0 spec: " + spec);
  }
  std::string name = spec.substr(0, open);
  std::string args = spec.substr(open + 1, close - open - 1);
  auto parse_int = [&](const std::string& s) {
    try {
      size_t pos = 0;
      std::int64_t v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("bad g0 parameter '" + s + "' in: " + spec);
    }
  };
  if (name == "path") return make_path(parse_int(args));
  if (name == "cycle") return make_cycle(parse_int(args));
  if (name == "star") return make_star(parse_int(args));
  if (name == "complete_bipartite") {
    auto comma = args.find(',');
    if (comma == std::string::npos) {
      throw ValidationError("complete_bipartite needs two parameters: " +
                            spec);
    }
    return make_complete_bipartite(parse_int(args.substr(0, comma)),
                                   parse_int(args.substr(comma + 1)));
  }
  throw ValidationError("unknown g0 generator: " + name);
}

VertexId uniform_vertex(const Graph& g, SplitMix64& rng) {
  if (g.vertex_count() == 0) throw ValidationError("uniform_vertex: empty graph");
  return static_cast<VertexId>(
      rng.next_below(static_cast<std::uint64_t>(g.vertex_count())));
}

VertexId random_walk(const Graph& g, VertexId start, std::int64_t length,
                     SplitMix64& rng) {
  if (start < 0 || start >= g.vertex_count()) {
    throw ValidationError("random_walk: unknown start id " +
                          std::to_string(start));
  }
  VertexId cur = start;
  for (std::int64_t i = 0; i < length; ++i) {
    const auto& nbrs = g.neighbors(cur);
    cur = nbrs[rng.next_below(nbrs.size())];
  }
  return cur;
}

VertexId degree_proportional_vertex(const Graph& g, SplitMix64& rng) {
  const auto& he = g.half_edges();
  if (he.empty()) {
    throw ValidationError("degree_proportional_vertex: no half-edges");
  }
  return he[rng.next_below(he.size())];
}

VertexId DirectedGraph::attach_new_vertex(VertexId target) {
  if (target < 0 || target >= vertex_count()) {
    throw ValidationError("attach_new_vertex: unknown target id " +
                          std::to_string(target));
  }
  VertexId fresh = vertex_count();
  out_adjacency_.emplace_back(std::vector<VertexId>{target});
  ++steps_taken_;
  return fresh;
}

DirectedGraph DirectedGraph::from_edges(
    std::int64_t vertex_count,
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (vertex_count <= 0) throw ValidationError("G0: empty directed graph");
  DirectedGraph g;
  g.v0_ = vertex_count;
  g.e0_ = static_cast<std::int64_t>(edges.size());
  g.out_adjacency_.resize(vertex_count);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw ValidationError("G0: directed edge endpoint out of range");
    }
    g.out_adjacency_[a].push_back(b);
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (g.out_adjacency_[v].empty()) {
      throw ValidationError("G0: vertex " + std::to_string(v) +
                            " has out-degree 0");
    }
  }
  return g;
}

DirectedGraph make_directed_cycle(std::int64_t n) {
  if (n < 2) throw ValidationError("directed cycle requires n >= 2");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return DirectedGraph::from_edges(n, edges);
}

VertexId uniform_vertex(const DirectedGraph& g, SplitMix64& rng) {
  if (g.vertex_count() == 0) throw ValidationError("uniform_vertex: empty graph");
  return static_cast<VertexId>(
      rng.next_below(static_cast<std::uint64_t>(g.vertex_count())));
}

VertexId directed_random_walk(const DirectedGraph& g, VertexId start,
                              std::int64_t length, SplitMix64& rng) {
  if (start < 0 || start >= g.vertex_count()) {
    throw ValidationError("directed_random_walk: unknown start id " +
                          std::to_string(start));
  }
  VertexId cur = start;
  for (std::int64_t i = 0; i < length; ++i) {
    const auto& nbrs = g.out_neighbors(cur);
    cur = nbrs[rng.next_below(nbrs.size())];
  }
  return cur;
}

}  // namespace rwag
