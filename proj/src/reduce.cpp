#include "switchquest/reduce.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace switchquest {

std::map<std::string, std::string> ReductionResult::id_map(const Graph& input) const {
  std::map<std::string, std::string> m;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(input.vertex_count()); ++v) {
    m.emplace(input.id(v), graph.id(image[v]));
  }
  return m;
}

ReductionResult compose(const ReductionResult& first, const ReductionResult& second) {
  ReductionResult r{second.graph, {}};
  r.image.reserve(first.image.size());
  for (VertexIndex v : first.image) r.image.push_back(second.image[v]);
  return r;
}

namespace {

enum class Mode { kSimple, kMulti };

std::vector<std::string> split_members(const std::string& id) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : id) {
    if (c == '+') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string merged_name(const Graph& g, std::span<const VertexIndex> members) {
  std::set<std::string> parts;
  for (VertexIndex v : members) {
    for (auto& p : split_members(g.id(v))) parts.insert(std::move(p));
  }
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += '+';
    s += p;
  }
  return s;
}

ReductionResult merge_impl(const Graph& g, std::span<const VertexIndex> members_in,
                           const std::string& new_id, Mode mode) {
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  if (members_in.empty()) throw std::invalid_argument("merge: vertex set is empty");
  std::vector<char> in_set(n, 0);
  for (VertexIndex v : members_in) {
    if (v < 0 || v >= n) throw std::invalid_argument("merge: unknown vertex index");
    in_set[v] = 1;
  }
  VertexIndex first = n;
  for (VertexIndex v : members_in) first = std::min(first, v);

  ReductionResult r;
  r.image.assign(n, kNoVertex);
  std::vector<Vertex> vertices;
  VertexIndex merged = kNoVertex;
  for (VertexIndex v = 0; v < n; ++v) {
    if (in_set[v] && v != first) continue;
    const auto idx = static_cast<VertexIndex>(vertices.size());
    if (v == first) {
      merged = idx;
      std::optional<int> level;
      // Keep the level only when every member agrees.
      bool same = true;
      for (VertexIndex u : members_in) same = same && g.vertex(u).level == g.vertex(first).level;
      if (same) level = g.vertex(first).level;
      vertices.push_back(Vertex{new_id, level, {}});
      if (members_in.size() == 1) vertices.back().tags = g.vertex(first).tags;
    } else {
      vertices.push_back(g.vertex(v));
    }
    r.image[v] = idx;
  }
  for (VertexIndex v = 0; v < n; ++v) {
    if (in_set[v]) r.image[v] = merged;
  }

  const bool keep_loops = mode == Mode::kMulti && g.allow_cycles();
  std::vector<Edge> edges;
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const auto& e : g.edges()) {
    const bool internal = in_set[e.from] && in_set[e.to];
    if (internal && !(keep_loops && g.out_degree(e.from) != 1)) continue;
    const VertexIndex a = r.image[e.from];
    const VertexIndex b = r.image[e.to];
    if (mode == Mode::kSimple && !seen.insert({a, b}).second) continue;
    edges.push_back(Edge{e.id, a, b});
  }
  r.graph = Graph(g.name(), std::move(vertices), std::move(edges), r.image[g.source()],
                  mode == Mode::kMulti && g.multigraph(), g.allow_cycles());
  return r;
}

ReductionResult identity(const Graph& g) {
  ReductionResult r{g, {}};
  r.image.resize(g.vertex_count());
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) r.image[v] = v;
  return r;
}

// Simple mode also collapses parallel edges already present in the input.
ReductionResult collapse_parallel(const Graph& g) {
  std::vector<Edge> edges;
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const auto& e : g.edges()) {
    if (seen.insert({e.from, e.to}).second) edges.push_back(e);
  }
  ReductionResult r = identity(g);
  r.graph = Graph(g.name(), {g.vertices().begin(), g.vertices().end()}, std::move(edges),
                  g.source(), false, g.allow_cycles());
  return r;
}

ReductionResult reduce_impl(const Graph& g, Mode mode, std::mt19937_64* rng) {
  if (mode == Mode::kSimple && !is_acyclic(g)) {
    throw std::invalid_argument("reduce_simple: input graph has a cycle");
  }
  ReductionResult acc = mode == Mode::kSimple ? collapse_parallel(g) : identity(g);
  for (;;) {
    const Graph& cur = acc.graph;
    std::vector<VertexIndex> candidates;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(cur.vertex_count()); ++v) {
      if (cur.out_degree(v) == 1 && cur.head(v, 0) != v) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    VertexIndex x = candidates.front();
    if (rng) {
      x = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng)];
    }
    const VertexIndex members[2] = {x, cur.head(x, 0)};
    acc = compose(acc, merge_impl(cur, members, merged_name(cur, members), mode));
  }
  return acc;
}

ReductionResult answer_impl(const Graph& g, VertexIndex x, EdgeIndex e, Mode mode) {
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  if (x < 0 || x >= n) throw std::invalid_argument("apply_answer: unknown vertex");
  if (g.is_sink(x)) throw std::invalid_argument("apply_answer: " + g.id(x) + " is a sink");
  if (e < 0 || e >= static_cast<EdgeIndex>(g.edge_count()) || g.edge(e).from != x) {
    throw std::invalid_argument("apply_answer: edge is not an out-edge of " + g.id(x));
  }
  if (mode == Mode::kSimple && !is_acyclic(g)) {
    throw std::invalid_argument("apply_answer_simple: input graph has a cycle");
  }
  const std::pair<VertexIndex, int> choice{x, g.slot_of(e)};
  ReductionResult acc = restrict_switches(g, std::span(&choice, 1));
  const VertexIndex y = g.edge(e).to;
  if (y != x) {
    const VertexIndex members[2] = {x, y};
    acc = compose(acc, merge_impl(acc.graph, members, merged_name(acc.graph, members), mode));
  }
  if (mode == Mode::kMulti) {
    bool min2 = true;
    for (VertexIndex v = 0; v < n; ++v) min2 = min2 && g.out_degree(v) != 1;
    ReductionResult rest = reduce_impl(acc.graph, mode, nullptr);
    if (min2 && !(rest.graph == acc.graph)) {
      throw std::logic_error("apply_answer_multi: reduction cascaded on a min-out-degree-2 input");
    }
    return compose(acc, rest);
  }
  return compose(acc, reduce_impl(acc.graph, mode, nullptr));
}

}  // namespace

ReductionResult merge_set_simple(const Graph& g, std::span<const VertexIndex> members,
                                 const std::string& new_id) {
  return merge_impl(g, members, new_id, Mode::kSimple);
}

ReductionResult merge_set_multi(const Graph& g, std::span<const VertexIndex> members,
                                const std::string& new_id) {
  return merge_impl(g, members, new_id, Mode::kMulti);
}

ReductionResult reduce_simple(const Graph& g) { return reduce_impl(g, Mode::kSimple, nullptr); }

ReductionResult reduce_simple(const Graph& g, std::uint64_t order_seed) {
  std::mt19937_64 rng(order_seed);
  return reduce_impl(g, Mode::kSimple, &rng);
}

ReductionResult reduce_multi(const Graph& g) { return reduce_impl(g, Mode::kMulti, nullptr); }

ReductionResult reduce_multi(const Graph& g, std::uint64_t order_seed) {
  std::mt19937_64 rng(order_seed);
  return reduce_impl(g, Mode::kMulti, &rng);
}

ReductionResult apply_answer_simple(const Graph& g, VertexIndex x, EdgeIndex e) {
  return answer_impl(g, x, e, Mode::kSimple);
}

ReductionResult apply_answer_multi(const Graph& g, VertexIndex x, EdgeIndex e) {
  return answer_impl(g, x, e, Mode::kMulti);
}

ReductionResult restrict_switches(const Graph& g,
                                  std::span<const std::pair<VertexIndex, int>> choices) {
  std::vector<int> keep(g.vertex_count(), -1);
  for (auto [v, slot] : choices) keep[v] = slot;
  std::vector<Edge> edges;
  for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(g.edge_count()); ++e) {
    const Edge& ed = g.edge(e);
    if (keep[ed.from] >= 0 && g.slot_of(e) != keep[ed.from]) continue;
    edges.push_back(ed);
  }
  ReductionResult r = identity(g);
  r.graph = Graph(g.name(), {g.vertices().begin(), g.vertices().end()}, std::move(edges),
                  g.source(), g.multigraph(), g.allow_cycles());
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Longest path length starting at each vertex (edges). Acyclic only.
std::vector<int> longest_from(const Graph& g) {
  auto order = topological_order(g);
  if (!order) throw std::invalid_argument("longest path: graph has a cycle");
  std::vector<int> dist(g.vertex_count(), 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    for (EdgeIndex e : g.out_edges(*it)) dist[*it] = std::max(dist[*it], dist[g.edge(e).to] + 1);
  }
  return dist;
}

}  // namespace

int longest_path_len(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return longest_from(g)[g.source()];
}

int longest_path_len_global(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  auto dist = longest_from(g);
  return *std::max_element(dist.begin(), dist.end());
}

PathEdges longest_path(const Graph& g) {
  PathEdges p;
  if (g.vertex_count() == 0) return p;
  auto dist = longest_from(g);
  VertexIndex v = g.source();
  p.vertices.push_back(v);
  while (dist[v] > 0) {
    VertexIndex best = kNoVertex;
    EdgeIndex best_edge = kNoEdge;
    for (EdgeIndex e : g.out_edges(v)) {
      const VertexIndex w = g.edge(e).to;
      if (dist[w] == dist[v] - 1 && (best == kNoVertex || w < best)) {
        best = w;
        best_edge = e;
      }
    }
    p.edges.push_back(best_edge);
    p.vertices.push_back(best);
    v = best;
  }
  return p;
}

GeneralizedPath longest_generalized_path(const Graph& g, int vertex_cap) {
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  if (n > vertex_cap) {
    throw SearchCapExceeded("longest_generalized_path: " + std::to_string(n) +
                            " vertices exceed the cap of " + std::to_string(vertex_cap));
  }
  GeneralizedPath best;
  if (n == 0) return best;
  std::vector<char> on_path(n, 0);
  std::vector<VertexIndex> verts;
  std::vector<EdgeIndex> edges;

  std::function<void(VertexIndex)> dfs = [&](VertexIndex v) {
    EdgeIndex closing = kNoEdge;
    for (EdgeIndex e : g.out_edges(v)) {
      if (on_path[g.edge(e).to]) {
        closing = e;
        break;
      }
    }
    const int len = static_cast<int>(edges.size()) + (closing != kNoEdge ? 1 : 0);
    if (best.vertices.empty() || len > best.length()) {
      best.vertices = verts;
      best.edges = edges;
      best.closed = closing != kNoEdge;
      if (best.closed) best.edges.push_back(closing);
    }
    std::vector<std::pair<VertexIndex, EdgeIndex>> next;
    for (EdgeIndex e : g.out_edges(v)) {
      const VertexIndex w = g.edge(e).to;
      if (on_path[w]) continue;
      bool dup = false;
      for (auto& [u, f] : next) dup = dup || u == w;
      if (!dup) next.emplace_back(w, e);
    }
    std::sort(next.begin(), next.end());
    for (auto [w, e] : next) {
      on_path[w] = 1;
      verts.push_back(w);
      edges.push_back(e);
      dfs(w);
      edges.pop_back();
      verts.pop_back();
      on_path[w] = 0;
    }
  };
  on_path[g.source()] = 1;
  verts.push_back(g.source());
  dfs(g.source());
  return best;
}

int longest_generalized_path_len(const Graph& g, int vertex_cap) {
  return longest_generalized_path(g, vertex_cap).length();
}

bool reachability_preserved_check(const Graph& g, const ReductionResult& r) {
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  std::vector<std::vector<char>> after(r.graph.vertex_count());
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(r.graph.vertex_count()); ++v) {
    after[v] = reachable_from(r.graph, v);
  }
  for (VertexIndex x = 0; x < n; ++x) {
    auto before = reachable_from(g, x);
    for (VertexIndex y = 0; y < n; ++y) {
      if (before[y] && !after[r.image[x]][r.image[y]]) return false;
    }
  }
  return true;
}

Json reduction_to_json(const Graph& input, const ReductionResult& r) {
  Json doc;
  doc["graph"] = graph_to_json(r.graph);
  Json m = Json::object();
  for (const auto& [k, v] : r.id_map(input)) m[k] = v;
  doc["map"] = std::move(m);
  return doc;
}

}  // namespace switchquest
