#include "switchquest/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace switchquest {

Graph::Graph(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges,
             VertexIndex source, bool multigraph, bool allow_cycles)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      source_(source),
      multigraph_(multigraph),
      allow_cycles_(allow_cycles) {
  const auto n = static_cast<VertexIndex>(vertices_.size());
  if (n > 0 && (source_ < 0 || source_ >= n)) {
    throw std::invalid_argument("graph '" + name_ + "': source index out of range");
  }
  out_.assign(vertices_.size(), {});
  in_degree_.assign(vertices_.size(), 0);
  slot_.assign(edges_.size(), -1);
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(edges_.size()); ++e) {
    const Edge& ed = edges_[e];
    if (ed.from < 0 || ed.from >= n || ed.to < 0 || ed.to >= n) {
      throw std::invalid_argument("graph '" + name_ + "': edge '" + ed.id +
                                  "' has an endpoint outside the vertex set");
    }
    slot_[e] = static_cast<int>(out_[ed.from].size());
    out_[ed.from].push_back(e);
    ++in_degree_[ed.to];
  }
  for (VertexIndex v = 0; v < n; ++v) vertex_index_.emplace(vertices_[v].id, v);
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(edges_.size()); ++e) {
    edge_index_.emplace(edges_[e].id, e);
  }
}

int Graph::slot_of(EdgeIndex e) const {
  if (e < 0 || e >= static_cast<EdgeIndex>(edges_.size())) return -1;
  return slot_[e];
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Graph::vertex_at(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw std::out_of_range("unknown vertex '" + std::string(id) + "'");
  return *v;
}

std::vector<VertexIndex> Graph::sinks() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(vertices_.size()); ++v) {
    if (is_sink(v)) out.push_back(v);
  }
  return out;
}

int Graph::max_out_degree() const {
  int m = 0;
  for (const auto& o : out_) m = std::max(m, static_cast<int>(o.size()));
  return m;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.name_ != b.name_ || a.source_ != b.source_ || a.multigraph_ != b.multigraph_ ||
      a.allow_cycles_ != b.allow_cycles_ || a.vertices_.size() != b.vertices_.size() ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const auto& x = a.vertices_[i];
    const auto& y = b.vertices_[i];
    if (x.id != y.id || x.level != y.level || x.tags != y.tags) return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.from != y.from || x.to != y.to) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

VertexIndex GraphBuilder::add_vertex(std::string id, std::optional<int> level,
                                     std::map<std::string, std::string> tags) {
  const auto v = static_cast<VertexIndex>(vertices_.size());
  index_.emplace(id, v);
  vertices_.push_back(Vertex{std::move(id), level, std::move(tags)});
  return v;
}

EdgeIndex GraphBuilder::add_edge(VertexIndex from, VertexIndex to, std::string id) {
  const int copy = ++parallel_[{from, to}];
  if (id.empty()) {
    id = vertices_.at(from).id + "->" + vertices_.at(to).id;
    if (copy > 1) id += "#" + std::to_string(copy);
  }
  edges_.push_back(Edge{std::move(id), from, to});
  return static_cast<EdgeIndex>(edges_.size() - 1);
}

EdgeIndex GraphBuilder::add_edge(std::string_view from, std::string_view to) {
  return add_edge(index(from), index(to));
}

VertexIndex GraphBuilder::index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw std::out_of_range("unknown vertex '" + std::string(id) + "'");
  return it->second;
}

Graph GraphBuilder::build(std::string name, VertexIndex source, bool multigraph,
                          bool allow_cycles) const {
  return Graph(std::move(name), vertices_, edges_, source, multigraph, allow_cycles);
}

// ---------------------------------------------------------------------------

namespace {

std::string join_ids(const Graph& g, const std::vector<VertexIndex>& vs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += sep;
    s += g.id(vs[i]);
  }
  return s;
}

// Returns one directed cycle as a vertex sequence (first vertex repeated at
// the end), or an empty vector.
std::vector<VertexIndex> find_cycle(const Graph& g) {
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  std::vector<int> color(n, 0);
  std::vector<VertexIndex> parent(n, kNoVertex);
  for (VertexIndex root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<VertexIndex, int>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < g.out_degree(v)) {
        const VertexIndex w = g.head(v, next++);
        if (color[w] == 1) {
          std::vector<VertexIndex> cyc{w};
          for (VertexIndex x = v; x != w; x = parent[x]) cyc.push_back(x);
          cyc.push_back(w);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
        if (color[w] == 0) {
          color[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> out;
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  if (n == 0) {
    out.push_back("empty graph: no vertices");
    return out;
  }

  {
    std::set<std::string> seen;
    for (const auto& v : g.vertices()) {
      if (!seen.insert(v.id).second) out.push_back("duplicate vertex id: " + v.id);
    }
    seen.clear();
    for (const auto& e : g.edges()) {
      if (!seen.insert(e.id).second) out.push_back("duplicate edge id: " + e.id);
    }
  }

  std::vector<VertexIndex> roots;
  for (VertexIndex v = 0; v < n; ++v) {
    if (g.in_degree(v) == 0) roots.push_back(v);
  }
  if (g.allow_cycles()) {
    // With cycles the source may be re-entered; every other vertex needs a parent.
    std::vector<VertexIndex> extra;
    for (auto r : roots) {
      if (r != g.source()) extra.push_back(r);
    }
    if (!extra.empty()) out.push_back("multiple sources: " + join_ids(g, roots, ", "));
  } else if (roots.size() > 1) {
    out.push_back("multiple sources: " + join_ids(g, roots, ", "));
  } else if (roots.empty()) {
    out.push_back("no source: every vertex has an incoming edge");
  } else if (roots.front() != g.source()) {
    out.push_back("source mismatch: declared " + g.id(g.source()) + " but in-degree-0 vertex is " +
                  g.id(roots.front()));
  }

  if (!g.allow_cycles()) {
    auto cyc = find_cycle(g);
    if (!cyc.empty()) out.push_back("cycle detected: " + join_ids(g, cyc, " -> "));
  }

  if (!g.multigraph()) {
    std::set<std::pair<VertexIndex, VertexIndex>> pairs;
    for (const auto& e : g.edges()) {
      if (!pairs.insert({e.from, e.to}).second) {
        out.push_back("parallel edges in simple graph: " + g.id(e.from) + "->" + g.id(e.to) +
                      " (edge " + e.id + ")");
      }
    }
  }

  auto reach = reachable_from(g, g.source());
  for (VertexIndex v = 0; v < n; ++v) {
    if (!reach[v]) out.push_back("unreachable from source: " + g.id(v));
  }

  bool all_levels = true;
  for (const auto& v : g.vertices()) all_levels = all_levels && v.level.has_value();
  if (all_levels) {
    for (const auto& e : g.edges()) {
      const int a = *g.vertex(e.from).level;
      const int b = *g.vertex(e.to).level;
      if (b != a + 1) {
        std::ostringstream os;
        os << "level step violated on edge " << e.id << ": " << a << " -> " << b;
        out.push_back(os.str());
      }
    }
  }
  return out;
}

SwitchAssignment SwitchAssignment::all_left(const Graph& g) {
  SwitchAssignment a;
  a.slot.assign(g.vertex_count(), -1);
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    if (!g.is_sink(v)) a.slot[v] = 0;
  }
  return a;
}

bool SwitchAssignment::valid_for(const Graph& g) const {
  if (slot.size() != g.vertex_count()) return false;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    if (g.is_sink(v)) {
      if (slot[v] != -1) return false;
    } else if (slot[v] < 0 || slot[v] >= g.out_degree(v)) {
      return false;
    }
  }
  return true;
}

std::vector<char> reachable_from(const Graph& g, VertexIndex from) {
  std::vector<char> seen(g.vertex_count(), 0);
  if (from == kNoVertex) return seen;
  std::vector<VertexIndex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.out_edges(v)) {
      const VertexIndex w = g.edge(e).to;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::optional<std::vector<VertexIndex>> topological_order(const Graph& g) {
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  std::vector<int> indeg(n);
  for (VertexIndex v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
  std::deque<VertexIndex> queue;
  for (VertexIndex v = 0; v < n; ++v) {
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::vector<VertexIndex> order;
  order.reserve(n);
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (EdgeIndex e : g.out_edges(v)) {
      if (--indeg[g.edge(e).to] == 0) queue.push_back(g.edge(e).to);
    }
  }
  if (static_cast<VertexIndex>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_acyclic(const Graph& g) { return topological_order(g).has_value(); }

bool is_out_tree(const Graph& g) {
  if (g.vertex_count() == 0 || !is_acyclic(g)) return false;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    const int want = v == g.source() ? 0 : 1;
    if (g.in_degree(v) != want) return false;
  }
  return true;
}

std::vector<int> vertex_levels(const Graph& g) {
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  std::vector<int> level(n, 0);
  bool all = n > 0;
  for (const auto& v : g.vertices()) all = all && v.level.has_value();
  if (all) {
    for (VertexIndex v = 0; v < n; ++v) level[v] = *g.vertex(v).level;
    return level;
  }
  auto order = topological_order(g);
  if (!order) throw std::invalid_argument("vertex_levels: graph has a cycle");
  auto reach = reachable_from(g, g.source());
  if (n > 0) level[g.source()] = 1;
  for (VertexIndex v : *order) {
    if (!reach[v] || level[v] == 0) continue;
    for (EdgeIndex e : g.out_edges(v)) {
      const VertexIndex w = g.edge(e).to;
      level[w] = std::max(level[w], level[v] + 1);
    }
  }
  return level;
}

// ---------------------------------------------------------------------------

namespace {

struct IsoSide {
  const Graph& g;
  std::vector<std::map<VertexIndex, int>> out_mult;
  std::vector<std::map<VertexIndex, int>> in_mult;
  std::vector<std::tuple<int, int, int, std::vector<int>>> signature;

  explicit IsoSide(const Graph& graph) : g(graph) {
    const auto n = static_cast<VertexIndex>(g.vertex_count());
    out_mult.resize(n);
    in_mult.resize(n);
    for (const auto& e : g.edges()) {
      ++out_mult[e.from][e.to];
      ++in_mult[e.to][e.from];
    }
    std::vector<int> depth(n, 0);
    if (auto order = topological_order(g)) {
      for (VertexIndex v : *order) {
        for (EdgeIndex e : g.out_edges(v)) {
          depth[g.edge(e).to] = std::max(depth[g.edge(e).to], depth[v] + 1);
        }
      }
    }
    signature.resize(n);
    for (VertexIndex v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (EdgeIndex e : g.out_edges(v)) nb.push_back(g.out_degree(g.edge(e).to));
      std::sort(nb.begin(), nb.end());
      signature[v] = {g.in_degree(v), g.out_degree(v), depth[v], std::move(nb)};
    }
  }

  int mult(VertexIndex a, VertexIndex b) const {
    auto it = out_mult[a].find(b);
    return it == out_mult[a].end() ? 0 : it->second;
  }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const auto n = static_cast<VertexIndex>(a.vertex_count());
  if (n == 0) return true;
  IsoSide sa(a), sb(b);
  {
    auto x = sa.signature;
    auto y = sb.signature;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }

  // Map vertices of `a` in BFS order from the source, then the rest.
  std::vector<VertexIndex> order;
  std::vector<char> placed(n, 0);
  auto bfs = [&](VertexIndex root) {
    std::deque<VertexIndex> q{root};
    placed[root] = 1;
    while (!q.empty()) {
      const VertexIndex v = q.front();
      q.pop_front();
      order.push_back(v);
      for (EdgeIndex e : a.out_edges(v)) {
        const VertexIndex w = a.edge(e).to;
        if (!placed[w]) {
          placed[w] = 1;
          q.push_back(w);
        }
      }
    }
  };
  bfs(a.source());
  for (VertexIndex v = 0; v < n; ++v) {
    if (!placed[v]) bfs(v);
  }

  std::vector<VertexIndex> image(n, kNoVertex);
  std::vector<VertexIndex> preimage(n, kNoVertex);
  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const VertexIndex v = order[pos];
    for (VertexIndex w = 0; w < n; ++w) {
      if (preimage[w] != kNoVertex || sa.signature[v] != sb.signature[w]) continue;
      if (sa.mult(v, v) != sb.mult(w, w)) continue;
      bool ok = true;
      for (const auto& [u, m] : sa.out_mult[v]) {
        if (u != v && image[u] != kNoVertex && sb.mult(w, image[u]) != m) ok = false;
      }
      for (const auto& [u, m] : sa.in_mult[v]) {
        if (u != v && image[u] != kNoVertex && sb.mult(image[u], w) != m) ok = false;
      }
      for (const auto& [x, m] : sb.out_mult[w]) {
        if (x != w && preimage[x] != kNoVertex && sa.mult(v, preimage[x]) != m) ok = false;
      }
      for (const auto& [x, m] : sb.in_mult[w]) {
        if (x != w && preimage[x] != kNoVertex && sa.mult(preimage[x], v) != m) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      preimage[w] = v;
      if (extend(pos + 1)) return true;
      image[v] = kNoVertex;
      preimage[w] = kNoVertex;
    }
    return false;
  };
  return extend(0);
}

}  // namespace switchquest
