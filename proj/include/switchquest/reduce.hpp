#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "switchquest/graph.hpp"
#include "switchquest/graph_io.hpp"

namespace switchquest {

/// Output of a graph transformation: the new graph plus the image of every
/// input vertex in it. Merged vertices are named by joining the sorted member
/// ids with '+'.
struct ReductionResult {
  Graph graph;
  std::vector<VertexIndex> image;

  /// Input id -> output id, sorted by input id.
  std::map<std::string, std::string> id_map(const Graph& input) const;
};

/// `second` applied to the graph produced by `first`.
ReductionResult compose(const ReductionResult& first, const ReductionResult& second);

/// G(M): contract `members` into `new_id`; parallel edges collapse to one.
ReductionResult merge_set_simple(const Graph& g, std::span<const VertexIndex> members,
                                 const std::string& new_id);
/// G[M]: contract `members` into `new_id`; parallel edges are retained.
///
/// Edges inside M are dropped. On graphs that allow cycles they are kept as
/// self-loops of the merged vertex, except edges leaving an out-degree-1
/// member, whose information is absorbed by the contraction.
ReductionResult merge_set_multi(const Graph& g, std::span<const VertexIndex> members,
                                const std::string& new_id);

/// G': repeatedly merge out-degree-1 vertices into their out-neighbour, in
/// simple mode. Rejects cyclic input.
ReductionResult reduce_simple(const Graph& g);
/// Same, choosing each merge uniformly among the current candidates.
ReductionResult reduce_simple(const Graph& g, std::uint64_t order_seed);

/// G'': the multigraph counterpart. Accepts cyclic graphs; an out-degree-1
/// vertex whose only edge is a self-loop cannot be merged and stays.
ReductionResult reduce_multi(const Graph& g);
ReductionResult reduce_multi(const Graph& g, std::uint64_t order_seed);

/// G'_{xy}: drop every out-edge of x except e, merge x with head(e), then
/// reduce_simple.
ReductionResult apply_answer_simple(const Graph& g, VertexIndex x, EdgeIndex e);
/// G^{xy}: the multigraph counterpart. When the input has no out-degree-1
/// vertex the trailing reduction is a no-op; this is checked.
ReductionResult apply_answer_multi(const Graph& g, VertexIndex x, EdgeIndex e);

/// Number of edges of the longest path from the source. Rejects cycles.
int longest_path_len(const Graph& g);
/// Longest path anywhere in the graph, regardless of the source.
int longest_path_len_global(const Graph& g);

struct PathEdges {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> edges;
};
/// Lexicographically least (by vertex index) longest path from the source;
/// between parallel edges the first in the out-list is taken.
PathEdges longest_path(const Graph& g);

/// A simple path from the source, optionally closed by one extra edge from its
/// last vertex back onto the path (self-loops included).
struct GeneralizedPath {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> edges;  // path edges, then the closing edge if any
  bool closed = false;
  int length() const { return static_cast<int>(edges.size()); }
};

class SearchCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultGeneralizedPathCap = 20;

/// Exhaustive depth-first search; refuses graphs above `vertex_cap` vertices.
GeneralizedPath longest_generalized_path(const Graph& g,
                                         int vertex_cap = kDefaultGeneralizedPathCap);
int longest_generalized_path_len(const Graph& g, int vertex_cap = kDefaultGeneralizedPathCap);

/// For all x, y with y reachable from x in g, image(y) is reachable from
/// image(x) in r.graph.
bool reachability_preserved_check(const Graph& g, const ReductionResult& r);

/// Keep only the given out-edge slot of each listed vertex. Identity map.
ReductionResult restrict_switches(const Graph& g,
                                  std::span<const std::pair<VertexIndex, int>> choices);

Json reduction_to_json(const Graph& input, const ReductionResult& r);

}  // namespace switchquest
