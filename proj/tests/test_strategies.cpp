#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "switchquest/formulas.hpp"
#include "switchquest/generators.hpp"
#include "switchquest/reduce.hpp"
#include "switchquest/strategies.hpp"

using namespace switchquest;

namespace {

std::set<std::string> asked(const Graph& g, const std::vector<VertexIndex>& vs) {
  std::set<std::string> out;
  for (auto v : vs) out.insert(g.id(v));
  return out;
}

Knowledge with(const Graph& g, std::initializer_list<std::pair<const char*, int>> answers) {
  Knowledge k(g);
  for (auto [id, slot] : answers) k.set(g.vertex_at(id), slot);
  return k;
}

std::vector<VertexIndex> vs(const Graph& g, std::initializer_list<const char*> ids) {
  std::vector<VertexIndex> out;
  for (auto id : ids) out.push_back(g.vertex_at(id));
  return out;
}

int slot_for(const AdversaryResponse& r, VertexIndex v) {
  for (const auto& a : r.answers)
    if (a.vertex == v) return a.slot;
  return -1;
}

/// Replays a match round by round, calling `after` with the adversary after
/// every round.
template <class F>
MatchResult stepped_match(const Graph& g, int k, Questioner& q, Adversary& a, Goal goal, F after) {
  q.reset(g, k);
  a.reset(g, k);
  Knowledge known(g);
  MatchResult m;
  while (!is_determined(g, known, goal)) {
    auto qs = q.ask(g, k, known);
    REQUIRE(!qs.empty());
    REQUIRE(static_cast<int>(qs.size()) <= k);
    auto r = a.answer(g, known, qs);
    for (const auto& ans : r.answers) known.set(ans.vertex, ans.slot);
    for (const auto& ans : r.volunteered) known.set(ans.vertex, ans.slot);
    ++m.rounds;
    m.transcript.push_back({qs, r});
    after(a, known);
  }
  m.outcome = flow(g, known);
  m.final_knowledge = known;
  return m;
}

}  // namespace

TEST_SUITE("strategies") {

TEST_CASE("follow_flow") {
  const Graph p = gen_pyramid(3);
  auto q = questioner_follow_flow();
  auto a = adversary_all_left();
  const MatchResult m = run_match(p, 2, *q, *a, Goal::kPath);
  CHECK(m.rounds == 3);
  CHECK(asked(p, m.transcript[0].questions) == std::set<std::string>{"v1_1"});
  CHECK(asked(p, m.transcript[1].questions) == std::set<std::string>{"v2_1"});
  CHECK(asked(p, m.transcript[2].questions) == std::set<std::string>{"v3_1"});
  CHECK(p.id(m.outcome.end()) == "v4_1");

  const Graph t = gen_tree(2, 2);
  for (const auto& slots : oracle::all_assignments(t)) {
    SwitchAssignment sa;
    sa.slot = slots;
    AssignmentAdversary adv(sa);
    auto qq = questioner_follow_flow();
    CHECK(run_match(t, 1, *qq, adv, Goal::kPath).rounds == 2);
  }
  auto qq = questioner_follow_flow();
  qq->reset(p, 1);
  CHECK(qq->ask(p, 1, with(p, {{"v1_1", 0}, {"v2_1", 0}, {"v3_1", 0}})).empty());
}

TEST_CASE("algorithm_a") {
  const Graph p = gen_pyramid(3);
  auto q = questioner_algorithm_a();
  q->reset(p, 3);
  CHECK(asked(p, q->ask(p, 3, Knowledge(p))) == std::set<std::string>{"v1_1", "v2_1", "v2_2"});

  const Graph ab = gen_algb_example(2, 1);
  q->reset(ab, 2);
  CHECK(asked(ab, q->ask(ab, 2, Knowledge(ab))) == std::set<std::string>{"x1", "c1_1"});

  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_dag(7, 3, 1, s % 2 == 1, 50 + s);
    for (int k = 1; k <= 3; ++k) {
      auto qa = questioner_algorithm_a();
      CHECK(worst_case_rounds(g, k, *qa, Goal::kPath).rounds <= longest_path_len(g));
    }
  }
}

TEST_CASE("algorithm_b") {
  const Graph ab = gen_algb_example(2, 2);
  auto q = questioner_algorithm_b();
  q->reset(ab, 2);
  CHECK(asked(ab, q->ask(ab, 2, Knowledge(ab))) == std::set<std::string>{"x1", "x2"});

  AssignmentAdversary spine(SwitchAssignment::all_left(ab));
  auto q2 = questioner_algorithm_b();
  CHECK(run_match(ab, 2, *q2, spine, Goal::kPath).rounds <= 3);

  // Flow leaves the spine at x1: the next round asks the frontier child.
  auto q3 = questioner_algorithm_b();
  q3->reset(ab, 2);
  const auto next = q3->ask(ab, 2, with(ab, {{"x1", 1}, {"x2", 0}}));
  CHECK(asked(ab, next) == std::set<std::string>{"c1_1"});

  auto q4 = questioner_algorithm_b();
  CHECK_THROWS(q4->reset(gen_pyramid(2), 2));
}

TEST_CASE("tree_levels") {
  const Graph t24 = gen_tree(2, 4);
  auto q = questioner_tree_levels();
  q->reset(t24, 3);
  CHECK(asked(t24, q->ask(t24, 3, Knowledge(t24))) == std::set<std::string>{"t1_1", "t2_1", "t2_2"});

  auto q2 = questioner_tree_levels();
  CHECK(worst_case_rounds(gen_tree(3, 2), 4, *q2, Goal::kPath).rounds == 1);
  // T_2(2) has depth 2: one question per level.
  CHECK(worst_case_rounds(gen_tree(2, 2), 1, *q2, Goal::kPath).rounds == 2);
  CHECK(worst_case_rounds(gen_tree(2, 2), 1, *q2, Goal::kPath).rounds == tree_rounds(2, 2, 1));
  CHECK_THROWS(q2->reset(gen_pyramid(2), 2));
}

TEST_CASE("pyramid_recursive") {
  const Graph p4 = gen_pyramid(4);
  auto q = questioner_pyramid_recursive(2);
  q->reset(p4, 3);
  CHECK(asked(p4, q->ask(p4, 3, Knowledge(p4))) == std::set<std::string>{"v1_1", "v2_1", "v2_2"});
  CHECK(asked(p4, q->ask(p4, 3, with(p4, {{"v1_1", 1}, {"v2_2", 0}}))) ==
        std::set<std::string>{"v3_2", "v4_2", "v4_3"});
  auto qw = questioner_pyramid_recursive(2);
  CHECK(worst_case_rounds(p4, 3, *qw, Goal::kPath).rounds == 2);
  CHECK(worst_case_rounds(gen_pyramid(2), 3, *qw, Goal::kPath).rounds == 1);
  CHECK_THROWS(questioner_pyramid_recursive(2)->reset(p4, 2));
  for (int n = 1; n <= 4; ++n)
    for (int l = 1; l <= 3; ++l) {
      auto qr = questioner_pyramid_recursive(l);
      CHECK(worst_case_rounds(gen_pyramid(n), s_of_l(l), *qr, Goal::kPath).rounds <= pyramid_upper(n, l));
    }
}

TEST_CASE("pyramid_k2") {
  const Graph p3 = gen_pyramid(3);
  auto q = questioner_pyramid_k2();
  q->reset(p3, 2);
  CHECK(asked(p3, q->ask(p3, 2, Knowledge(p3))) == std::set<std::string>{"v1_1", "v3_2"});
  CHECK(asked(p3, q->ask(p3, 2, with(p3, {{"v1_1", 0}, {"v3_2", 0}}))) ==
        std::set<std::string>{"v2_1", "v3_1"});
  auto qr = questioner_pyramid_k2();
  qr->reset(p3, 2);
  qr->ask(p3, 2, Knowledge(p3));
  CHECK(asked(p3, qr->ask(p3, 2, with(p3, {{"v1_1", 1}, {"v3_2", 0}}))) ==
        std::set<std::string>{"v2_2", "v3_3"});

  const Graph p1 = gen_pyramid(1);
  auto q1 = questioner_pyramid_k2();
  q1->reset(p1, 2);
  CHECK(asked(p1, q1->ask(p1, 2, Knowledge(p1))) == std::set<std::string>{"v1_1"});

  for (int n = 1; n <= 5; ++n) {
    auto qw = questioner_pyramid_k2();
    CHECK(worst_case_rounds(gen_pyramid(n), 2, *qw, Goal::kPath).rounds == ceil_div(2 * n, 3));
  }
  CHECK_THROWS(questioner_pyramid_k2()->reset(p3, 3));
}

TEST_CASE("layered_complete") {
  auto q = questioner_layered_complete();
  CHECK(worst_case_rounds(gen_gpy_complete(2, 4), 3, *q, Goal::kPath).rounds == 2);
  CHECK(worst_case_rounds(gen_gpy_complete(3, 3), 4, *q, Goal::kPath).rounds == 2);
  CHECK(worst_case_rounds(gen_gpy_complete(3, 3), 1, *q, Goal::kPath).rounds == 3);
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 5; ++k)
        CHECK(worst_case_rounds(gen_gpy_complete(d, n), k, *q, Goal::kPath).rounds <=
              gpy_layered_upper(d, n, k));
  CHECK_THROWS(questioner_layered_complete()->reset(gen_tree(2, 3), 3));
}

TEST_CASE("all_left") {
  const Graph p = gen_pyramid(3);
  auto q = questioner_follow_flow();
  auto a = adversary_all_left();
  const MatchResult m1 = run_match(p, 1, *q, *a, Goal::kPath);
  const MatchResult m2 = run_match(p, 1, *q, *a, Goal::kPath);
  CHECK(p.id(m1.outcome.end()) == "v4_1");
  CHECK(match_to_json(p, m1) == match_to_json(p, m2));
  for (const auto& r : m1.transcript)
    for (const auto& ans : r.response.answers) CHECK(ans.slot == 0);
}

TEST_CASE("longest-path adversary") {
  auto a = adversary_thm3_longest_path();
  CHECK(best_response_rounds(gen_pyramid(2), 1, *a, Goal::kSink) == 2);
  CHECK_THROWS(a->reset(gen_pyramid(2), 2));
  CHECK_THROWS(a->reset(random_dag(6, 3, 2, true, 1), 1));
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_dag(9, 3, 2, false, 1200 + s);
    CHECK(best_response_rounds(g, 1, *a, Goal::kSink) == longest_path_len(g));
    // Path length drops by at most one per answer.
    for (const char* qn : {"follow_flow", "algorithm_a"}) {
      auto q = make_questioner(qn);
      auto adv = adversary_thm3_longest_path();
      int prev = longest_path_len(g);
      stepped_match(g, 1, *q, *adv, Goal::kSink, [&](const Adversary& aa, const Knowledge&) {
        const int cur = thm3_path_length(aa);
        CHECK(cur <= prev);
        CHECK(cur >= prev - 1);
        prev = cur;
      });
    }
  }
}

TEST_CASE("path-edge adversary") {
  auto a = adversary_thm4_path_edge();
  CHECK(best_response_rounds(gen_hl(2, 2), 1, *a, Goal::kPath) == 4);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_dag(9, 3, 2, true, 1300 + s);
    CHECK(best_response_rounds(g, 1, *a, Goal::kPath) == longest_path_len(g));
  }
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_cyclic_multigraph(7, 3, 1400 + s);
    CHECK(best_response_rounds(g, 1, *a, Goal::kPath) == longest_generalized_path_len(g));
  }
}

TEST_CASE("tree_min_subtree") {
  const Graph t = gen_tree(2, 2);
  auto a = adversary_tree_min_subtree();
  a->reset(t, 2);
  auto r1 = a->answer(t, Knowledge(t), vs(t, {"t1_1"}));
  CHECK(slot_for(r1, t.vertex_at("t1_1")) == 0);
  auto r2 = a->answer(t, Knowledge(t), vs(t, {"t1_1", "t2_1"}));
  CHECK(slot_for(r2, t.vertex_at("t1_1")) == 1);
  CHECK(best_response_rounds(gen_tree(2, 3), 3, *a, Goal::kPath) == 2);
  CHECK_THROWS(adversary_tree_min_subtree()->reset(gen_pyramid(2), 1));

  // At most log'_d |S| asked vertices of each round lie on the final path.
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= 8; ++k)
        for (const char* qn : {"tree_levels", "algorithm_a", "follow_flow"}) {
          const Graph g = gen_tree(d, n);
          auto q = make_questioner(qn);
          auto adv = adversary_tree_min_subtree();
          const MatchResult m = run_match(g, k, *q, *adv, Goal::kPath);
          std::set<VertexIndex> on_path(m.outcome.vertices.begin(), m.outcome.vertices.end());
          for (const auto& round : m.transcript) {
            const int hits = static_cast<int>(std::count_if(
                round.questions.begin(), round.questions.end(),
                [&](VertexIndex v) { return on_path.count(v) > 0; }));
            CHECK(hits <= log_prime(d, static_cast<int>(round.questions.size())));
          }
        }
}

TEST_CASE("pyramid_shorter_side") {
  const Graph p = gen_pyramid(3);
  auto a = adversary_pyramid_shorter_side();
  a->reset(p, 2);
  auto r = a->answer(p, Knowledge(p), vs(p, {"v1_1", "v2_1"}));
  CHECK(slot_for(r, p.vertex_at("v2_1")) == 0);
  CHECK(slot_for(r, p.vertex_at("v1_1")) == 1);
  CHECK(r.answers.front().vertex == p.vertex_at("v2_1"));

  auto off = a->answer(p, Knowledge(p), vs(p, {"v2_1", "v3_2", "v3_3"}));
  for (const auto& ans : off.answers) CHECK(ans.slot == 0);

  CHECK(best_response_rounds(gen_pyramid(4), 2, *a, Goal::kSink) >= 3);
  CHECK_THROWS(adversary_pyramid_shorter_side()->reset(gen_tree(2, 2), 1));
}

TEST_CASE("gpy_left_committing") {
  auto a = adversary_gpy_left_committing();
  CHECK(best_response_rounds(gen_gpy_complete(2, 3), 3, *a, Goal::kSink) >= 2);
  CHECK(best_response_rounds(gen_pyramid(3), 2, *a, Goal::kSink) >= 2);
  CHECK_THROWS(adversary_gpy_left_committing()->reset(gen_hl(2, 2), 1));
  CHECK_NOTHROW(adversary_gpy_left_committing()->reset(gen_tree(2, 2), 1));

  // At most one asked vertex per round extends the known prefix.
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= 6; ++k)
        for (const char* qn : {"layered_complete", "algorithm_a", "follow_flow"}) {
          const Graph g = gen_gpy_complete(d, n);
          auto q = make_questioner(qn);
          auto adv = adversary_gpy_left_committing();
          stepped_match(g, k, *q, *adv, Goal::kPath, [&](const Adversary& aa, const Knowledge&) {
            CHECK(gpy_endpoint_hits(aa) <= 1);
          });
        }
}

TEST_CASE("clones continue identically") {
  const std::vector<std::pair<std::string, Graph>> cases = {
      {"thm3_longest_path", random_dag(9, 3, 2, false, 3)},
      {"pyramid_shorter_side", gen_pyramid(5)},
      {"gpy_left_committing", gen_gpy_complete(3, 4)},
      {"tree_min_subtree", gen_tree(2, 4)},
      {"thm4_path_edge", random_dag(9, 3, 2, true, 3)},
  };
  for (const auto& [name, g] : cases) {
    const int k = name == "thm3_longest_path" || name == "thm4_path_edge" ? 1 : 2;
    auto q = questioner_algorithm_a();
    auto a = make_adversary(name);
    std::unique_ptr<Adversary> snapshot;
    Knowledge at_snapshot;
    stepped_match(g, k, *q, *a, Goal::kPath, [&](const Adversary& aa, const Knowledge& kn) {
      if (!snapshot) {
        snapshot = aa.clone();
        at_snapshot = kn;
      }
    });
    // Continue the match from the snapshot twice: identical answers.
    auto q1 = questioner_follow_flow();
    auto q2 = questioner_follow_flow();
    auto c1 = snapshot->clone();
    auto c2 = snapshot->clone();
    Knowledge k1 = at_snapshot, k2 = at_snapshot;
    while (!is_determined(g, k1, Goal::kPath)) {
      auto qs = q1->ask(g, k, k1);
      auto r1 = c1->answer(g, k1, qs);
      auto r2 = c2->answer(g, k2, q2->ask(g, k, k2));
      CHECK(r1.answers == r2.answers);
      CHECK(r1.volunteered == r2.volunteered);
      CHECK(c1->state_key() == c2->state_key());
      for (const auto& x : r1.answers) k1.set(x.vertex, x.slot), k2.set(x.vertex, x.slot);
      for (const auto& x : r1.volunteered) k1.set(x.vertex, x.slot), k2.set(x.vertex, x.slot);
    }
  }
}

TEST_CASE("registry") {
  for (const auto& n : questioner_names()) CHECK_NOTHROW(make_questioner(n == "pyramid_recursive" ? n + ":l=2" : n));
  for (const auto& n : adversary_names()) CHECK_NOTHROW(make_adversary(n));
  CHECK(make_questioner("pyramid_recursive:l=2")->name() == "pyramid_recursive:l=2");
  CHECK_THROWS_AS(make_questioner("nope"), UnknownStrategyError);
  CHECK_THROWS_AS(make_adversary("nope"), UnknownStrategyError);
  CHECK_THROWS_AS(make_questioner("pyramid_recursive:q=2"), UnknownStrategyError);
  const auto adversaries = adversary_names();
  CHECK(std::count(adversaries.begin(), adversaries.end(), std::string("omit_first")) == 1);
}

}  // TEST_SUITE
