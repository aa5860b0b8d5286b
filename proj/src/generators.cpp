#include "switchquest/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace switchquest {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string num(long long x) { return std::to_string(x); }

}  // namespace

Graph gen_tree(int d, int n) {
  require(d >= 2, "gen_tree: d must be >= 2");
  require(n >= 0, "gen_tree: n must be >= 0");
  GraphBuilder b;
  std::vector<std::vector<VertexIndex>> levels(n + 1);
  long long width = 1;
  for (int lvl = 1; lvl <= n + 1; ++lvl) {
    for (long long p = 1; p <= width; ++p) {
      levels[lvl - 1].push_back(
          b.add_vertex("t" + num(lvl) + "_" + num(p), lvl, {{"level", num(lvl)}}));
    }
    width *= d;
  }
  for (int lvl = 0; lvl < n; ++lvl) {
    for (std::size_t p = 0; p < levels[lvl].size(); ++p) {
      for (int c = 0; c < d; ++c) b.add_edge(levels[lvl][p], levels[lvl + 1][p * d + c]);
    }
  }
  return b.build("T_" + num(d) + "(" + num(n) + ")");
}

long long pyramid_vertex_count(int n) { return static_cast<long long>(n + 1) * (n + 2) / 2; }
long long pyramid_nonsink_count(int n) { return static_cast<long long>(n) * (n + 1) / 2; }

Graph gen_pyramid(int n) {
  require(n >= 1, "gen_pyramid: n must be >= 1");
  GraphBuilder b;
  auto vid = [](int i, int j) { return "v" + num(i) + "_" + num(j); };
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= i; ++j) b.add_vertex(vid(i, j), i, {{"i", num(i)}, {"j", num(j)}});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      b.add_edge(vid(i, j), vid(i + 1, j));
      b.add_edge(vid(i, j), vid(i + 1, j + 1));
    }
  }
  return b.build("Py(" + num(n) + ")");
}

Graph gen_gpy_complete(int d, int n) {
  require(d >= 2, "gen_gpy_complete: d must be >= 2");
  require(n >= 1, "gen_gpy_complete: n must be >= 1");
  GraphBuilder b;
  auto vid = [](int i, int j) { return "g" + num(i) + "_" + num(j); };
  b.add_vertex(vid(1, 1), 1, {{"pos", "1"}});
  for (int i = 2; i <= n + 1; ++i) {
    for (int j = 1; j <= d; ++j) b.add_vertex(vid(i, j), i, {{"pos", num(j)}});
  }
  for (int j = 1; j <= d; ++j) b.add_edge(vid(1, 1), vid(2, j));
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j <= d; ++j) {
      b.add_edge(vid(i, j), vid(i + 1, j));
      for (int t = 1; t <= d; ++t) {
        if (t != j) b.add_edge(vid(i, j), vid(i + 1, t));
      }
    }
  }
  return b.build("GPy_" + num(d) + "(" + num(n) + ")");
}

Graph gen_gpy_grid(int d, int n) {
  require(d >= 2, "gen_gpy_grid: d must be >= 2");
  require(n >= 1, "gen_gpy_grid: n must be >= 1");
  GraphBuilder b;
  using Point = std::vector<int>;
  auto vid = [](const Point& p) {
    std::string s = "g";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "_" : "") + num(p[i]);
    return s;
  };
  auto coord = [](const Point& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + num(p[i]);
    return s;
  };
  // Points of each coordinate sum, first coordinate descending.
  std::vector<std::vector<Point>> by_sum(n + 1);
  Point cur(d, 0);
  for (int s = 0; s <= n; ++s) {
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == d - 1) {
        cur[idx] = left;
        by_sum[s].push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[idx] = v;
        rec(idx + 1, left - v);
      }
    };
    rec(0, s);
  }
  for (int s = 0; s <= n; ++s) {
    for (const auto& p : by_sum[s]) b.add_vertex(vid(p), s + 1, {{"coord", coord(p)}});
  }
  for (int s = 0; s < n; ++s) {
    for (const auto& p : by_sum[s]) {
      for (int c = 0; c < d; ++c) {
        Point q = p;
        ++q[c];
        b.add_edge(vid(p), vid(q));
      }
    }
  }
  return b.build("GPyGrid_" + num(d) + "(" + num(n) + ")");
}

Graph gen_hl(int k, int l) {
  require(k >= 1 && l >= 1, "gen_hl: k and l must be >= 1");
  const int len = k * l;
  GraphBuilder b;
  for (int i = 1; i <= len + 1; ++i) b.add_vertex("x" + num(i), i, {{"spine", num(i)}});
  for (int i = 1; i <= len; ++i) b.add_vertex("s" + num(i), i + 1);
  for (int i = 1; i <= len; ++i) {
    b.add_edge("x" + num(i), "x" + num(i + 1));
    b.add_edge("x" + num(i), "s" + num(i));
  }
  return b.build("H_" + num(l) + "[k=" + num(k) + "]");
}

Graph gen_algb_example(int k, int l) {
  require(k >= 2, "gen_algb_example: k must be >= 2");
  require(l >= 1, "gen_algb_example: l must be >= 1");
  const int len = k * l;
  GraphBuilder b;
  for (int i = 1; i <= len + 1; ++i) b.add_vertex("x" + num(i), i, {{"spine", num(i)}});
  for (int i = 1; i <= len; ++i) {
    const std::string x = "x" + num(i);
    b.add_edge(x, "x" + num(i + 1));
    for (int j = 1; j < k; ++j) {
      const std::string c = "c" + num(i) + "_" + num(j);
      b.add_edge(b.index(x), b.add_vertex(c, i + 1));
      if (i < len) {
        b.add_edge(b.index(c), b.add_vertex(c + "_1", i + 2));
        b.add_edge(b.index(c), b.add_vertex(c + "_2", i + 2));
      }
    }
  }
  return b.build("AlgB_" + num(k) + "(" + num(l) + ")");
}

Graph gen_tree_remark(int n) {
  require(n >= 2, "gen_tree_remark: n must be >= 2");
  GraphBuilder b;
  for (int i = 1; i <= n; ++i) b.add_vertex("p" + num(i), i, {{"spine", num(i)}});
  for (int i = 1; i < n; ++i) {
    b.add_edge("p" + num(i), "p" + num(i + 1));
    b.add_edge(b.index("p" + num(i)), b.add_vertex("q" + num(i), i + 1));
  }
  // Complete binary tree rooted at p_n; its level t (t >= 2) sits at depth n + t - 1.
  std::vector<VertexIndex> prev{b.index("p" + num(n))};
  for (int t = 2; t <= n; ++t) {
    std::vector<VertexIndex> next;
    for (std::size_t p = 0; p < prev.size(); ++p) {
      for (int c = 0; c < 2; ++c) {
        const auto w =
            b.add_vertex("b" + num(t) + "_" + num(static_cast<long long>(2 * p + c + 1)), n + t - 1);
        b.add_edge(prev[p], w);
        next.push_back(w);
      }
    }
    prev = std::move(next);
  }
  return b.build("TreeRemark(" + num(n) + ")");
}

Graph gen_tree_of_h(int k, int l) {
  require(k >= 2, "gen_tree_of_h: k must be >= 2");
  require(l >= 1, "gen_tree_of_h: l must be >= 1");
  GraphBuilder b;
  // Copies are numbered in BFS order of the k-ary tree.
  long long copies = 0;
  long long width = 1;
  std::vector<int> depth_of;
  for (int lvl = 0; lvl < l; ++lvl) {
    for (long long c = 0; c < width; ++c) depth_of.push_back(lvl);
    copies += width;
    width *= k;
  }
  auto x = [](long long c, int i) { return "h" + num(c + 1) + "_x" + num(i); };
  auto s = [](long long c, int i) { return "h" + num(c + 1) + "_s" + num(i); };
  for (long long c = 0; c < copies; ++c) {
    const int base = depth_of[c] * (k + 1);
    for (int i = 1; i <= k + 1; ++i) {
      b.add_vertex(x(c, i), base + i, {{"copy", num(c + 1)}, {"pos", num(i)}});
    }
    for (int i = 1; i <= k; ++i) b.add_vertex(s(c, i), base + i + 1, {{"copy", num(c + 1)}});
  }
  for (long long c = 0; c < copies; ++c) {
    for (int i = 1; i <= k; ++i) {
      b.add_edge(x(c, i), x(c, i + 1));
      b.add_edge(x(c, i), s(c, i));
    }
    if (depth_of[c] + 1 < l) {
      for (int j = 0; j < k; ++j) b.add_edge(x(c, k + 1), x(c * k + 1 + j, 1));
    }
  }
  return b.build("TreeOfH_" + num(k) + "(" + num(l) + ")");
}

Graph random_dag(int n_vertices, int max_outdeg, int min_outdeg, bool multigraph,
                 std::uint64_t seed) {
  require(n_vertices >= 1, "random_dag: n_vertices must be >= 1");
  require(min_outdeg >= 1, "random_dag: min_outdeg must be >= 1");
  require(max_outdeg >= 2, "random_dag: max_outdeg must be >= 2");
  require(min_outdeg <= max_outdeg, "random_dag: min_outdeg exceeds max_outdeg");
  const int n = n_vertices;
  // Largest vertex index that can still be a non-sink.
  const int last_nonsink = multigraph ? n - 2 : n - 1 - min_outdeg;
  require(n == 1 || last_nonsink >= 0,
          "random_dag: infeasible degree constraints for " + num(n) + " vertices");

  std::mt19937_64 rng(seed);
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("n" + num(i));
  std::vector<char> has_parent(n, 0);
  has_parent[0] = 1;
  auto first_orphan = [&](int after) {
    for (int j = after + 1; j < n; ++j) {
      if (!has_parent[j]) return j;
    }
    return -1;
  };

  for (int i = 0; i + 1 < n; ++i) {
    const int avail = n - 1 - i;
    const bool can = multigraph ? avail >= 1 : avail >= min_outdeg;
    if (!can) break;
    const int orphan = first_orphan(i);
    bool nonsink;
    if (orphan == i + 1 || (i == last_nonsink && orphan != -1)) {
      nonsink = true;
    } else {
      nonsink = std::uniform_int_distribution<int>(0, 3)(rng) != 0;
    }
    if (!nonsink) continue;

    const int hi = multigraph ? max_outdeg : std::min(max_outdeg, avail);
    const int deg = std::uniform_int_distribution<int>(min_outdeg, hi)(rng);
    std::vector<int> targets;
    if (i == last_nonsink) {
      // Last vertex that can adopt the remaining orphans.
      for (int j = i + 1; j < n; ++j) {
        if (!has_parent[j]) targets.push_back(j);
      }
    } else if (orphan == i + 1) {
      targets.push_back(orphan);
    }
    std::uniform_int_distribution<int> pick(i + 1, n - 1);
    while (static_cast<int>(targets.size()) < deg) {
      const int t = pick(rng);
      if (!multigraph && std::find(targets.begin(), targets.end(), t) != targets.end()) continue;
      targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    for (int t : targets) {
      b.add_edge(i, t);
      has_parent[t] = 1;
    }
  }
  return b.build("random_dag(" + num(n) + "," + num(max_outdeg) + "," + num(min_outdeg) + "," +
                     (multigraph ? "multi" : "simple") + "," + num(static_cast<long long>(seed)) +
                     ")",
                 0, multigraph, false);
}

Graph random_cyclic_multigraph(int n_vertices, int max_outdeg, std::uint64_t seed) {
  require(n_vertices >= 2, "random_cyclic_multigraph: n_vertices must be >= 2");
  require(max_outdeg >= 2, "random_cyclic_multigraph: max_outdeg must be >= 2");
  const int n = n_vertices;
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<std::vector<int>> out(n);
    for (int j = 1; j < n; ++j) {
      std::vector<int> room;
      for (int p = 0; p < j; ++p) {
        if (static_cast<int>(out[p].size()) < max_outdeg) room.push_back(p);
      }
      const int p = room[std::uniform_int_distribution<std::size_t>(0, room.size() - 1)(rng)];
      out[p].push_back(j);
    }
    for (int v = 0; v < n; ++v) {
      if (out[v].empty() && v != 0 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;
      const int deg = std::uniform_int_distribution<int>(2, max_outdeg)(rng);
      std::uniform_int_distribution<int> pick(1, n - 1);
      while (static_cast<int>(out[v].size()) < deg) out[v].push_back(pick(rng));
    }
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex("n" + num(i));
    for (int v = 0; v < n; ++v) {
      for (int t : out[v]) b.add_edge(v, t);
    }
    Graph g = b.build("random_cyclic(" + num(n) + "," + num(max_outdeg) + "," +
                          num(static_cast<long long>(seed)) + ")",
                      0, true, true);
    if (!is_acyclic(g)) return g;
  }
}

}  // namespace switchquest
