#include <doctest.h>

#include "oracles.hpp"
#include "switchquest/formulas.hpp"
#include "switchquest/generators.hpp"
#include "switchquest/reduce.hpp"
#include "switchquest/solver.hpp"

using namespace switchquest;

namespace {

int solve(const Graph& g, int k, Goal goal) {
  SolverConfig cfg;
  cfg.first_moves = false;
  return solve_exact(g, k, goal, cfg).value;
}

Graph one_sink_diamond() {
  GraphBuilder b;
  for (auto id : {"s", "a", "b", "t"}) b.add_vertex(id);
  b.add_edge("s", "a");
  b.add_edge("s", "b");
  b.add_edge("a", "t");
  b.add_edge("b", "t");
  return b.build("diamond");
}

std::vector<Graph> small_instances() {
  std::vector<Graph> gs = {gen_pyramid(1), gen_pyramid(2), gen_pyramid(3), gen_tree(2, 2),
                           gen_tree(3, 1),  gen_hl(2, 1),   gen_hl(3, 1),   gen_algb_example(2, 1),
                           gen_gpy_complete(2, 2), gen_gpy_complete(3, 2), one_sink_diamond()};
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = random_dag(3 + s % 6, 3, 1, s % 2 == 1, 8000 + s);
    if (askable_count(g) <= 7) gs.push_back(std::move(g));
  }
  return gs;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("documented values") {
  CHECK(solve(gen_pyramid(2), 1, Goal::kSink) == 2);
  CHECK(solve(gen_pyramid(4), 2, Goal::kPath) == 3);
  CHECK(solve(gen_tree(3, 2), 4, Goal::kPath) == 1);
  CHECK(solve(one_sink_diamond(), 1, Goal::kSink) == 0);
  CHECK(solve(gen_hl(2, 1), 1, Goal::kSink) == 2);
  CHECK(solve(gen_hl(2, 1), 2, Goal::kSink) == 1);
  CHECK(solve(gen_tree_of_h(2, 1), 2, Goal::kSink) == 1);
  CHECK(solve(gen_tree_of_h(2, 1), 1, Goal::kSink) == 2);
  CHECK(solve(gen_pyramid(3), 2, Goal::kPath) == 2);
}

TEST_CASE("curves") {
  const auto c = solve_curve(gen_pyramid(3), 6, Goal::kSink);
  REQUIRE(c.size() == 6);
  CHECK(c[0] == std::pair{1, 3});
  CHECK(c[1] == std::pair{2, 2});
  CHECK(c[2] == std::pair{3, 2});
  CHECK(c[5] == std::pair{6, 1});
  const auto h = solve_curve(gen_hl(2, 2), 2, Goal::kSink);
  CHECK(h == std::vector<std::pair<int, int>>{{1, 4}, {2, 2}});
  for (const Graph& g : small_instances()) {
    const int n = askable_count(g);
    if (n == 0) continue;
    for (Goal goal : {Goal::kSink, Goal::kPath}) {
      const int v = solve(g, n, goal);
      CHECK(v <= 1);
    }
  }
}

TEST_CASE("agrees with brute-force minimax") {
  for (const Graph& g : small_instances()) {
    INFO(g.name());
    for (int k = 1; k <= 3; ++k)
      for (Goal goal : {Goal::kSink, Goal::kPath}) CHECK(solve(g, k, goal) == oracle::value(g, k, goal));
  }
}

TEST_CASE("first moves") {
  const SolveResult r = solve_exact(gen_pyramid(3), 2, Goal::kPath);
  CHECK(r.value == 2);
  REQUIRE_FALSE(r.optimal_first_moves.empty());
  const Graph p = gen_pyramid(3);
  for (const auto& move : r.optimal_first_moves) {
    CHECK(move.size() <= 2);
    CHECK_FALSE(move.empty());
    for (auto v : move) CHECK(p.is_askable(v));
  }
  // The documented opening for k = 2 is among the optimal ones.
  std::vector<VertexIndex> opening = {p.vertex_at("v1_1"), p.vertex_at("v3_2")};
  std::sort(opening.begin(), opening.end());
  CHECK(std::find(r.optimal_first_moves.begin(), r.optimal_first_moves.end(), opening) !=
        r.optimal_first_moves.end());
  CHECK(solve_exact(one_sink_diamond(), 1, Goal::kSink).optimal_first_moves.empty());
}

TEST_CASE("solver properties") {
  for (const Graph& g : small_instances()) {
    INFO(g.name());
    const int n = std::max(1, askable_count(g));
    std::vector<int> sink(n + 1), path(n + 1);
    for (int k = 1; k <= n; ++k) {
      sink[k] = solve(g, k, Goal::kSink);
      path[k] = solve(g, k, Goal::kPath);
      CHECK(sink[k] <= path[k]);
    }
    for (int k = 1; k < n; ++k) {
      CHECK(sink[k + 1] <= sink[k]);
      CHECK(path[k + 1] <= path[k]);
    }
    for (int k = 1; k <= n; ++k)
      for (int m = 1; m <= k; ++m) {
        CHECK(sink[m] <= ratio_bound(m, k) * sink[k]);
        CHECK(path[m] <= ratio_bound(m, k) * path[k]);
      }
  }
}

TEST_CASE("reductions preserve values") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_dag(4 + s % 7, 3, 1, false, 8100 + s);
    const Graph gm = random_dag(4 + s % 7, 3, 1, true, 8200 + s);
    for (int k = 1; k <= 2; ++k) {
      CHECK(solve(g, k, Goal::kSink) == solve(reduce_simple(g).graph, k, Goal::kSink));
      CHECK(solve(gm, k, Goal::kPath) == solve(reduce_multi(gm).graph, k, Goal::kPath));
    }
  }
}

TEST_CASE("configuration does not change values") {
  SolverConfig par;
  par.parallel = true;
  par.threads = 3;
  SolverConfig sym;
  sym.symmetry_reduction = true;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k)
      for (Goal goal : {Goal::kSink, Goal::kPath}) {
        const Graph p = gen_pyramid(n);
        const SolveResult a = solve_exact(p, k, goal);
        const SolveResult b = solve_exact(p, k, goal, par);
        const SolveResult c = solve_exact(p, k, goal, sym);
        CHECK(a.value == b.value);
        CHECK(a.value == c.value);
        CHECK(a.optimal_first_moves == b.optimal_first_moves);
        CHECK(c.stats.symmetry_used);
      }
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_dag(9, 3, 2, false, 8300 + s);
    CHECK(solve_exact(g, 2, Goal::kSink).value == solve_exact(g, 2, Goal::kSink, par).value);
    CHECK_FALSE(solve_exact(g, 1, Goal::kSink, sym).stats.symmetry_used);
  }
}

TEST_CASE("cap and goal restrictions") {
  SolverConfig small;
  small.max_askable = 5;
  try {
    solve_exact(gen_pyramid(3), 1, Goal::kPath, small);
    FAIL("expected a refusal");
  } catch (const SolverCapExceeded& e) {
    CHECK(e.askable() == 6);
  }
  CHECK_THROWS_AS(solve_exact(gen_pyramid(6), 1, Goal::kPath), SolverCapExceeded);
  const Graph c = random_cyclic_multigraph(6, 3, 2);
  CHECK_THROWS(solve_exact(c, 1, Goal::kSink));
  CHECK(solve_exact(c, 1, Goal::kPath).value == longest_generalized_path_len(c));
  CHECK_THROWS(solve_exact(gen_pyramid(2), 0, Goal::kPath));
}

TEST_CASE("json") {
  const Graph p = gen_pyramid(2);
  const Json doc = solve_to_json(p, solve_exact(p, 2, Goal::kPath));
  CHECK(doc["value"] == 2);
  CHECK(doc["optimal_first_moves"][0][0] == "v1_1");
  CHECK(doc["stats"].contains("states"));
  CHECK(doc["stats"].contains("memo_hits"));
  CHECK(doc["stats"].contains("ms"));
}

}  // TEST_SUITE
