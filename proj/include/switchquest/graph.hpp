#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace switchquest {

using VertexIndex = std::int32_t;
using EdgeIndex = std::int32_t;

inline constexpr VertexIndex kNoVertex = -1;
inline constexpr EdgeIndex kNoEdge = -1;

struct Vertex {
  std::string id;
  std::optional<int> level;
  std::map<std::string, std::string> tags;
};

struct Edge {
  std::string id;
  VertexIndex from = kNoVertex;
  VertexIndex to = kNoVertex;
};

/// Single-source directed (multi)graph with ordered out-edge lists.
///
/// The out-list of a vertex is the subsequence of `edges()` leaving it, in
/// array order. Position 0 of an out-list is the "left" edge. A switch of a
/// vertex is identified by its out-list position (its slot).
///
/// Construction does not enforce the structural invariants; call validate()
/// to obtain the list of violations. Graphs produced by answer application
/// may legitimately contain vertices that are no longer reachable.
class Graph {
 public:
  Graph() = default;
  Graph(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges,
        VertexIndex source, bool multigraph, bool allow_cycles);

  const std::string& name() const { return name_; }
  bool multigraph() const { return multigraph_; }
  bool allow_cycles() const { return allow_cycles_; }
  VertexIndex source() const { return source_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  const Vertex& vertex(VertexIndex v) const { return vertices_[v]; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  const std::string& id(VertexIndex v) const { return vertices_[v].id; }

  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_[v]; }
  int out_degree(VertexIndex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(VertexIndex v) const { return in_degree_[v]; }
  bool is_sink(VertexIndex v) const { return out_[v].empty(); }
  /// Forced vertices have exactly one out-edge; their switch is known for free.
  bool is_forced(VertexIndex v) const { return out_[v].size() == 1; }
  bool is_askable(VertexIndex v) const { return out_[v].size() >= 2; }

  EdgeIndex out_edge(VertexIndex v, int slot) const { return out_[v][slot]; }
  VertexIndex head(VertexIndex v, int slot) const { return edges_[out_[v][slot]].to; }
  /// Out-list position of `e` at its tail, or -1.
  int slot_of(EdgeIndex e) const;

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  VertexIndex vertex_at(std::string_view id) const;  // throws std::out_of_range

  std::vector<VertexIndex> sinks() const;
  int max_out_degree() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  VertexIndex source_ = kNoVertex;
  bool multigraph_ = false;
  bool allow_cycles_ = false;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<int> slot_;
  std::vector<int> in_degree_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::unordered_map<std::string, EdgeIndex> edge_index_;
};

/// Incremental construction; edge insertion order fixes out-list order.
class GraphBuilder {
 public:
  VertexIndex add_vertex(std::string id, std::optional<int> level = std::nullopt,
                         std::map<std::string, std::string> tags = {});
  /// Without an explicit id the edge is named "from->to", with a "#n" suffix
  /// for the n-th parallel copy.
  EdgeIndex add_edge(VertexIndex from, VertexIndex to, std::string id = {});
  EdgeIndex add_edge(std::string_view from, std::string_view to);
  VertexIndex index(std::string_view id) const;

  Graph build(std::string name, VertexIndex source = 0, bool multigraph = false,
              bool allow_cycles = false) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::map<std::pair<VertexIndex, VertexIndex>, int> parallel_;
};

/// Every violated Graph invariant, one description per violation naming the
/// rule and the offending ids. Empty iff the graph is well formed.
std::vector<std::string> validate(const Graph& g);

/// Hidden switch setting: one out-list slot per non-sink vertex, -1 at sinks.
struct SwitchAssignment {
  std::vector<int> slot;

  static SwitchAssignment all_left(const Graph& g);
  EdgeIndex edge(const Graph& g, VertexIndex v) const { return g.out_edge(v, slot[v]); }
  bool valid_for(const Graph& g) const;
};

/// Vertices reachable from `from` (inclusive) following all edges.
std::vector<char> reachable_from(const Graph& g, VertexIndex from);

/// Topological order of all vertices, or nullopt when a cycle exists.
std::optional<std::vector<VertexIndex>> topological_order(const Graph& g);

bool is_acyclic(const Graph& g);

/// Rooted out-tree: acyclic, every vertex except the source has in-degree 1.
bool is_out_tree(const Graph& g);

/// Level of every vertex: the stored level when all vertices carry one,
/// otherwise the longest edge distance from the source plus one (acyclic
/// graphs only; unreachable vertices get 0).
std::vector<int> vertex_levels(const Graph& g);

/// Structural isomorphism of two small graphs (edge multiplicities respected,
/// out-list order ignored). Backtracking with degree refinement.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace switchquest
