#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

using switchquest::VertexIndex;

namespace {

/// Edge sequence of the flow under a full assignment.
std::vector<int> flow_edges(const Graph& g, const std::vector<int>& slots) {
  std::vector<int> edges;
  VertexIndex v = g.source();
  while (!g.is_sink(v)) {
    const int e = g.out_edge(v, slots[v]);
    edges.push_back(e);
    v = g.edge(e).to;
  }
  return edges;
}

struct Brute {
  const Graph& g;
  int k;
  Goal goal;
  std::vector<VertexIndex> askable;
  std::map<std::vector<int>, int> memo;
  std::map<std::vector<int>, bool> determined_memo;

  bool determined(const std::vector<int>& partial) {
    auto it = determined_memo.find(partial);
    if (it != determined_memo.end()) return it->second;
    std::set<std::vector<int>> outcomes;
    std::vector<int> full = partial;
    std::vector<VertexIndex> free;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      if (g.is_sink(v)) continue;
      if (g.out_degree(v) == 1) full[v] = 0;
      else if (full[v] < 0) free.push_back(v);
    }
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (outcomes.size() > 1) return;
      if (i == free.size()) {
        auto edges = flow_edges(g, full);
        if (goal == Goal::kSink)
          outcomes.insert({edges.empty() ? g.source() : g.edge(edges.back()).to});
        else
          outcomes.insert(edges);
        return;
      }
      for (int s = 0; s < g.out_degree(free[i]); ++s) {
        full[free[i]] = s;
        rec(i + 1);
      }
      full[free[i]] = -1;
    };
    rec(0);
    const bool d = outcomes.size() == 1;
    determined_memo[partial] = d;
    return d;
  }

  int solve(std::vector<int>& partial) {
    auto it = memo.find(partial);
    if (it != memo.end()) return it->second;
    if (determined(partial)) return memo[partial] = 0;
    std::vector<VertexIndex> unknown;
    for (VertexIndex v : askable)
      if (partial[v] < 0) unknown.push_back(v);
    int best = 1 << 20;
    const int n = static_cast<int>(unknown.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) > k) continue;
      std::vector<VertexIndex> set;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) set.push_back(unknown[i]);
      int worst = 0;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == set.size()) {
          worst = std::max(worst, 1 + solve(partial));
          return;
        }
        for (int s = 0; s < g.out_degree(set[i]); ++s) {
          partial[set[i]] = s;
          rec(i + 1);
        }
        partial[set[i]] = -1;
      };
      rec(0);
      best = std::min(best, worst);
    }
    return memo[partial] = best;
  }
};

}  // namespace

int value(const Graph& g, int k, Goal goal) {
  Brute b{g, k, goal, {}, {}, {}};
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v)
    if (g.out_degree(v) >= 2) b.askable.push_back(v);
  if (b.askable.size() > 10) throw std::invalid_argument("oracle::value: instance too large");
  std::vector<int> partial(g.vertex_count(), -1);
  return b.solve(partial);
}

int longest_path(const Graph& g) {
  int best = 0;
  std::function<void(VertexIndex, int)> dfs = [&](VertexIndex v, int len) {
    best = std::max(best, len);
    for (auto e : g.out_edges(v)) dfs(g.edge(e).to, len + 1);
  };
  dfs(g.source(), 0);
  return best;
}

std::vector<std::vector<int>> all_assignments(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(g.vertex_count(), -1);
  std::function<void(VertexIndex)> rec = [&](VertexIndex v) {
    if (v == static_cast<VertexIndex>(g.vertex_count())) {
      out.push_back(cur);
      return;
    }
    if (g.is_sink(v)) return rec(v + 1);
    for (int s = 0; s < g.out_degree(v); ++s) {
      cur[v] = s;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

int worst_case(const Graph& g, int k, const switchquest::Questioner& q, Goal goal) {
  int worst = 0;
  for (const auto& slots : all_assignments(g)) {
    switchquest::SwitchAssignment a;
    a.slot = slots;
    switchquest::AssignmentAdversary adv(a);
    auto qq = q.clone();
    worst = std::max(worst, switchquest::run_match(g, k, *qq, adv, goal).rounds);
  }
  return worst;
}

std::vector<std::vector<char>> reachability(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<VertexIndex> stack = {static_cast<VertexIndex>(x)};
    r[x][x] = 1;
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      for (auto e : g.out_edges(v)) {
        VertexIndex w = g.edge(e).to;
        if (!r[x][w]) {
          r[x][w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return r;
}

}  // namespace oracle
