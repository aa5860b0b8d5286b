#include "switchquest/game.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>

namespace switchquest {

const char* to_string(Goal goal) { return goal == Goal::kSink ? "sink" : "path"; }

Goal parse_goal(std::string_view text) {
  if (text == "sink") return Goal::kSink;
  if (text == "path") return Goal::kPath;
  throw std::invalid_argument("unknown goal '" + std::string(text) + "' (expected sink or path)");
}

Knowledge::Knowledge(const Graph& g) : slots_(g.vertex_count(), -1) {
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    if (g.is_forced(v)) slots_[v] = 0;
  }
}

std::string Knowledge::key() const {
  return std::string(reinterpret_cast<const char*>(slots_.data()),
                     slots_.size() * sizeof(std::int16_t));
}

FlowPath flow(const Graph& g, const Knowledge& k) {
  FlowPath p;
  std::vector<char> on(g.vertex_count(), 0);
  VertexIndex v = g.source();
  p.vertices.push_back(v);
  on[v] = 1;
  while (!g.is_sink(v) && k.known(v)) {
    const EdgeIndex e = g.out_edge(v, k.slot(v));
    const VertexIndex w = g.edge(e).to;
    p.edges.push_back(e);
    if (on[w]) {
      p.closed = true;
      break;
    }
    on[w] = 1;
    p.vertices.push_back(w);
    v = w;
  }
  return p;
}

std::vector<char> restricted_reachable(const Graph& g, const Knowledge& k, VertexIndex from) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexIndex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    auto visit = [&](VertexIndex w) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    };
    if (k.known(v)) {
      visit(g.head(v, k.slot(v)));
    } else {
      for (EdgeIndex e : g.out_edges(v)) visit(g.edge(e).to);
    }
  }
  return seen;
}

std::vector<VertexIndex> possible_sinks(const Graph& g, const Knowledge& k) {
  const FlowPath p = flow(g, k);
  std::vector<VertexIndex> out;
  if (p.closed) return out;
  const auto reach = restricted_reachable(g, k, p.end());
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    if (reach[v] && g.is_sink(v)) out.push_back(v);
  }
  return out;
}

bool is_determined(const Graph& g, const Knowledge& k, Goal goal) {
  const FlowPath p = flow(g, k);
  if (goal == Goal::kPath) return p.closed || g.is_sink(p.end());
  if (p.closed) return false;
  if (g.is_sink(p.end())) return true;
  const auto reach = restricted_reachable(g, k, p.end());
  int sinks = 0;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    if (reach[v] && g.is_sink(v) && ++sinks > 1) return false;
  }
  return sinks == 1;
}

std::vector<VertexIndex> live_vertices(const Graph& g, const Knowledge& k) {
  const FlowPath p = flow(g, k);
  std::vector<VertexIndex> out;
  if (p.closed) return out;
  const auto reach = restricted_reachable(g, k, p.end());
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    if (reach[v] && !k.known(v) && g.is_askable(v)) out.push_back(v);
  }
  return out;
}

bool has_cycle(const Graph& g) { return !is_acyclic(g); }

int askable_count(const Graph& g) {
  int n = 0;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    n += g.is_askable(v) ? 1 : 0;
  }
  return n;
}

// ---------------------------------------------------------------------------

void Questioner::reset(const Graph&, int) {}
void Adversary::reset(const Graph&, int) {}

AdversaryResponse Adversary::answer(const Graph& g, const Knowledge& known,
                                    std::span<const VertexIndex> questions) {
  std::vector<VertexIndex> fresh;
  std::vector<Answer> repeated;
  for (VertexIndex v : questions) {
    if (known.known(v)) {
      repeated.push_back({v, known.slot(v)});
    } else if (std::find(fresh.begin(), fresh.end(), v) == fresh.end() && !g.is_sink(v)) {
      fresh.push_back(v);
    }
  }
  AdversaryResponse r;
  if (!fresh.empty()) r = respond(g, known, fresh);
  r.answers.insert(r.answers.begin(), repeated.begin(), repeated.end());
  return r;
}

AdversaryResponse AssignmentAdversary::respond(const Graph&, const Knowledge&,
                                               std::span<const VertexIndex> questions) {
  AdversaryResponse r;
  for (VertexIndex v : questions) r.answers.push_back({v, assignment_.slot[v]});
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void check_questions(const Graph& g, int k, std::span<const VertexIndex> questions,
                     const std::string& who) {
  if (static_cast<int>(questions.size()) > k) {
    throw ProtocolError("questioner " + who + " asked " + std::to_string(questions.size()) +
                        " vertices with a budget of " + std::to_string(k));
  }
  if (questions.empty()) {
    throw ProtocolError("questioner " + who + " asked nothing while the goal is undetermined");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexIndex v : questions) {
    if (v < 0 || v >= static_cast<VertexIndex>(g.vertex_count())) {
      throw ProtocolError("questioner " + who + " asked an unknown vertex index " +
                          std::to_string(v));
    }
    if (g.is_sink(v)) throw ProtocolError("questioner " + who + " asked sink " + g.id(v));
    if (seen[v]) throw ProtocolError("questioner " + who + " asked " + g.id(v) + " twice");
    seen[v] = 1;
  }
}

// Validates the response against the question set and knowledge, then applies it.
void apply_response(const Graph& g, Knowledge& known, std::span<const VertexIndex> questions,
                    const AdversaryResponse& r, const std::string& who) {
  std::vector<char> asked(g.vertex_count(), 0);
  for (VertexIndex v : questions) asked[v] = 1;
  std::vector<char> answered(g.vertex_count(), 0);
  auto check_slot = [&](const Answer& a, const char* what) {
    if (a.vertex < 0 || a.vertex >= static_cast<VertexIndex>(g.vertex_count())) {
      throw ProtocolError("adversary " + who + " " + what + " an unknown vertex index");
    }
    if (a.slot < 0 || a.slot >= g.out_degree(a.vertex)) {
      throw ProtocolError("adversary " + who + " " + what + " " + g.id(a.vertex) +
                          " with invalid slot " + std::to_string(a.slot));
    }
  };
  for (const Answer& a : r.answers) {
    check_slot(a, "answered");
    if (!asked[a.vertex]) {
      throw ProtocolError("adversary " + who + " answered unasked vertex " + g.id(a.vertex));
    }
    if (answered[a.vertex]) {
      throw ProtocolError("adversary " + who + " answered " + g.id(a.vertex) + " twice");
    }
    if (known.known(a.vertex) && known.slot(a.vertex) != a.slot) {
      throw ProtocolError("adversary " + who + " contradicted the known switch of " +
                          g.id(a.vertex));
    }
    answered[a.vertex] = 1;
  }
  for (VertexIndex v : questions) {
    if (!answered[v]) {
      throw ProtocolError("adversary " + who + " omitted an answer for " + g.id(v));
    }
  }
  Knowledge next = known;
  for (const Answer& a : r.answers) next.set(a.vertex, a.slot);
  for (const Answer& a : r.volunteered) {
    check_slot(a, "volunteered");
    if (next.known(a.vertex) && next.slot(a.vertex) != a.slot) {
      throw ProtocolError("adversary " + who + " volunteered a switch of " + g.id(a.vertex) +
                          " that contradicts an earlier answer");
    }
    next.set(a.vertex, a.slot);
  }
  known = std::move(next);
}

void reject_cyclic_sink_search(const Graph& g, Goal goal) {
  if (goal == Goal::kSink && has_cycle(g)) {
    throw std::invalid_argument("sink search is not defined on graphs with cycles");
  }
}

}  // namespace

SwitchAssignment MatchResult::implied_assignment(const Graph& g) const {
  SwitchAssignment a = SwitchAssignment::all_left(g);
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    if (final_knowledge.known(v)) a.slot[v] = final_knowledge.slot(v);
  }
  return a;
}

MatchResult run_match(const Graph& g, int k, Questioner& q, Adversary& a, Goal goal) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  reject_cyclic_sink_search(g, goal);
  q.reset(g, k);
  a.reset(g, k);
  MatchResult m;
  Knowledge known(g);
  const int cap = 2 * static_cast<int>(g.vertex_count()) + 2;
  while (!is_determined(g, known, goal)) {
    if (m.rounds >= cap) {
      throw ProtocolError("no progress after " + std::to_string(cap) + " rounds (questioner " +
                          q.name() + ")");
    }
    std::vector<VertexIndex> questions = q.ask(g, k, known);
    check_questions(g, k, questions, q.name());
    AdversaryResponse r = a.answer(g, known, questions);
    apply_response(g, known, questions, r, a.name());
    m.transcript.push_back({std::move(questions), std::move(r)});
    ++m.rounds;
  }
  m.outcome = flow(g, known);
  m.final_knowledge = std::move(known);
  return m;
}

Json match_to_json(const Graph& g, const MatchResult& m) {
  auto pairs = [&](const std::vector<Answer>& list) {
    Json out = Json::array();
    for (const Answer& a : list) {
      out.push_back(Json::array({g.id(a.vertex), g.edge(g.out_edge(a.vertex, a.slot)).id}));
    }
    return out;
  };
  Json doc;
  doc["rounds"] = m.rounds;
  Json transcript = Json::array();
  for (std::size_t i = 0; i < m.transcript.size(); ++i) {
    const RoundRecord& r = m.transcript[i];
    Json jr;
    jr["round"] = i + 1;
    Json qs = Json::array();
    for (VertexIndex v : r.questions) qs.push_back(g.id(v));
    jr["questions"] = std::move(qs);
    jr["answers"] = pairs(r.response.answers);
    jr["volunteered"] = pairs(r.response.volunteered);
    transcript.push_back(std::move(jr));
  }
  doc["transcript"] = std::move(transcript);
  Json outcome;
  Json path = Json::array();
  for (VertexIndex v : m.outcome.vertices) path.push_back(g.id(v));
  outcome["path"] = std::move(path);
  if (!m.outcome.closed && g.is_sink(m.outcome.end())) {
    outcome["sink"] = g.id(m.outcome.end());
  } else {
    outcome["sink"] = nullptr;
  }
  outcome["closed"] = m.outcome.closed;
  doc["outcome"] = std::move(outcome);
  return doc;
}

// ---------------------------------------------------------------------------

WorstCaseResult worst_case_rounds(const Graph& g, int k, const Questioner& q, Goal goal,
                                  const WorstCaseOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  reject_cyclic_sink_search(g, goal);
  WorstCaseResult result;
  const int askable = askable_count(g);

  if (askable > opts.max_vertices) {
    if (!opts.allow_sampling) {
      throw SearchLimitError("worst_case_rounds: " + std::to_string(askable) +
                             " askable vertices exceed the exhaustive cap of " +
                             std::to_string(opts.max_vertices));
    }
    result.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    for (int s = 0; s < opts.samples; ++s) {
      SwitchAssignment a = SwitchAssignment::all_left(g);
      for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
        if (g.is_askable(v)) {
          a.slot[v] = std::uniform_int_distribution<int>(0, g.out_degree(v) - 1)(rng);
        }
      }
      auto player = q.clone();
      AssignmentAdversary adv(std::move(a));
      result.rounds = std::max(result.rounds, run_match(g, k, *player, adv, goal).rounds);
      ++result.evaluated;
    }
    return result;
  }

  const int cap = 2 * static_cast<int>(g.vertex_count()) + 2;
  std::unordered_map<std::string, int> memo;
  std::function<int(const Knowledge&, Questioner&, int)> rec =
      [&](const Knowledge& known, Questioner& player, int depth) -> int {
    if (is_determined(g, known, goal)) {
      ++result.evaluated;
      return 0;
    }
    if (depth >= cap) {
      throw ProtocolError("no progress after " + std::to_string(cap) + " rounds (questioner " +
                          player.name() + ")");
    }
    const auto sk = player.state_key();
    const bool memoizable = sk && sk->empty();
    if (memoizable) {
      if (auto it = memo.find(known.key()); it != memo.end()) return it->second;
    }
    const std::vector<VertexIndex> questions = player.ask(g, k, known);
    check_questions(g, k, questions, player.name());
    std::vector<VertexIndex> fresh;
    for (VertexIndex v : questions) {
      if (!known.known(v)) fresh.push_back(v);
    }
    std::vector<int> slots(fresh.size(), 0);
    int worst = 0;
    for (;;) {
      Knowledge next = known;
      for (std::size_t i = 0; i < fresh.size(); ++i) next.set(fresh[i], slots[i]);
      auto child = player.clone();
      worst = std::max(worst, 1 + rec(next, *child, depth + 1));
      std::size_t i = 0;
      while (i < fresh.size() && ++slots[i] == g.out_degree(fresh[i])) slots[i++] = 0;
      if (i == fresh.size()) break;
    }
    if (memoizable) memo.emplace(known.key(), worst);
    return worst;
  };

  auto player = q.clone();
  player->reset(g, k);
  result.rounds = rec(Knowledge(g), *player, 0);
  return result;
}

int best_response_rounds(const Graph& g, int k, const Adversary& a, Goal goal,
                         const BestResponseOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  reject_cyclic_sink_search(g, goal);
  const int askable = askable_count(g);
  if (askable > opts.max_askable) {
    throw SearchLimitError("best_response_rounds: " + std::to_string(askable) +
                           " askable vertices exceed the cap of " +
                           std::to_string(opts.max_askable));
  }
  auto root = a.clone();
  root->reset(g, k);
  const Knowledge start(g);
  if (is_determined(g, start, goal)) return 0;

  // Largest depth proven insufficient, per (knowledge, adversary state).
  std::unordered_map<std::string, int> failed;

  std::function<bool(const Knowledge&, const Adversary&, int)> can_finish =
      [&](const Knowledge& known, const Adversary& adv, int depth) -> bool {
    if (is_determined(g, known, goal)) return true;
    if (depth == 0) return false;
    std::optional<std::string> key;
    if (auto sk = adv.state_key()) {
      key = known.key() + '\x1f' + *sk;
      if (auto it = failed.find(*key); it != failed.end() && it->second >= depth) return false;
    }
    std::vector<VertexIndex> open;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      if (g.is_askable(v) && !known.known(v)) open.push_back(v);
    }
    const int n = static_cast<int>(open.size());
    for (int size = std::min(k, n); size >= 1; --size) {
      // Lexicographic size-combinations of `open`.
      std::vector<int> idx(size);
      for (int i = 0; i < size; ++i) idx[i] = i;
      std::vector<VertexIndex> questions(size);
      for (;;) {
        for (int i = 0; i < size; ++i) questions[i] = open[idx[i]];
        auto child = adv.clone();
        AdversaryResponse r = child->answer(g, known, questions);
        Knowledge next = known;
        apply_response(g, next, questions, r, child->name());
        if (can_finish(next, *child, depth - 1)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (key) {
      int& slot = failed[*key];
      slot = std::max(slot, depth);
    }
    return false;
  };

  for (int depth = 1;; ++depth) {
    if (opts.stop_at > 0 && depth >= opts.stop_at) return opts.stop_at;
    if (can_finish(start, *root, depth)) return depth;
  }
}

}  // namespace switchquest
