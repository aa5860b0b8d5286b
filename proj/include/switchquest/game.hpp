#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchquest/graph.hpp"
#include "switchquest/graph_io.hpp"

namespace switchquest {

enum class Goal { kSink, kPath };

const char* to_string(Goal goal);
Goal parse_goal(std::string_view text);  // "sink" | "path"

/// Revealed switches. Out-degree-1 vertices are known from the start.
class Knowledge {
 public:
  Knowledge() = default;
  explicit Knowledge(const Graph& g);

  bool known(VertexIndex v) const { return slots_[v] >= 0; }
  int slot(VertexIndex v) const { return slots_[v]; }
  void set(VertexIndex v, int slot) { slots_[v] = static_cast<std::int16_t>(slot); }
  std::size_t vertex_count() const { return slots_.size(); }
  const std::vector<std::int16_t>& slots() const { return slots_; }

  /// Raw bytes of the slot array; used as a hash key.
  std::string key() const;

  friend bool operator==(const Knowledge&, const Knowledge&) = default;

 private:
  std::vector<std::int16_t> slots_;
};

/// The maximal known prefix of the flow (P_max).
struct FlowPath {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> edges;
  /// The last edge leads back onto the path (cyclic graphs only).
  bool closed = false;

  VertexIndex end() const { return vertices.back(); }
  int length() const { return static_cast<int>(edges.size()); }
};

FlowPath flow(const Graph& g, const Knowledge& k);

/// Vertices reachable from `from` when known vertices keep only their known edge.
std::vector<char> restricted_reachable(const Graph& g, const Knowledge& k, VertexIndex from);

/// Sinks reachable from the flow frontier in the restricted graph.
std::vector<VertexIndex> possible_sinks(const Graph& g, const Knowledge& k);

bool is_determined(const Graph& g, const Knowledge& k, Goal goal);

/// Unknown askable vertices reachable from the frontier in the restricted graph.
std::vector<VertexIndex> live_vertices(const Graph& g, const Knowledge& k);

/// True when g contains a directed cycle; sink search is undefined there.
bool has_cycle(const Graph& g);

// ---------------------------------------------------------------------------
// Strategies

struct Answer {
  VertexIndex vertex = kNoVertex;
  int slot = -1;
  friend bool operator==(const Answer&, const Answer&) = default;
};

struct AdversaryResponse {
  std::vector<Answer> answers;
  std::vector<Answer> volunteered;
};

class Questioner {
 public:
  virtual ~Questioner() = default;
  virtual std::string name() const = 0;
  /// Called once before a match; may reject the graph or budget.
  virtual void reset(const Graph& g, int k);
  virtual std::vector<VertexIndex> ask(const Graph& g, int k, const Knowledge& known) = 0;
  virtual std::unique_ptr<Questioner> clone() const = 0;
  /// Complete description of the private state. "" for stateless strategies,
  /// nullopt when the state cannot be summarized.
  virtual std::optional<std::string> state_key() const { return std::string(); }
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  virtual void reset(const Graph& g, int k);
  /// Repeats the known switch for already-known questions and delegates the
  /// rest to respond().
  AdversaryResponse answer(const Graph& g, const Knowledge& known,
                           std::span<const VertexIndex> questions);
  virtual std::unique_ptr<Adversary> clone() const = 0;
  virtual std::optional<std::string> state_key() const { return std::string(); }

 protected:
  /// `questions` are distinct, unknown and askable, in asking order.
  virtual AdversaryResponse respond(const Graph& g, const Knowledge& known,
                                    std::span<const VertexIndex> questions) = 0;
};

/// Answers from a hidden switch assignment.
class AssignmentAdversary : public Adversary {
 public:
  explicit AssignmentAdversary(SwitchAssignment assignment) : assignment_(std::move(assignment)) {}
  std::string name() const override { return "assignment"; }
  std::unique_ptr<Adversary> clone() const override {
    return std::make_unique<AssignmentAdversary>(*this);
  }

 protected:
  AdversaryResponse respond(const Graph& g, const Knowledge& known,
                            std::span<const VertexIndex> questions) override;

 private:
  SwitchAssignment assignment_;
};

// ---------------------------------------------------------------------------
// Matches

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RoundRecord {
  std::vector<VertexIndex> questions;
  AdversaryResponse response;
};

struct MatchResult {
  int rounds = 0;
  std::vector<RoundRecord> transcript;
  FlowPath outcome;
  Knowledge final_knowledge;

  /// Switch assignment implied by the match: revealed switches, slot 0 elsewhere.
  SwitchAssignment implied_assignment(const Graph& g) const;
};

MatchResult run_match(const Graph& g, int k, Questioner& q, Adversary& a, Goal goal);

Json match_to_json(const Graph& g, const MatchResult& m);

struct WorstCaseOptions {
  int max_vertices = 22;  // non-sink, non-forced vertices for exhaustive mode
  bool allow_sampling = false;
  int samples = 2000;
  std::uint64_t seed = 1;
};

struct WorstCaseResult {
  int rounds = 0;
  bool exhaustive = true;  // false: a sampled lower estimate
  std::size_t evaluated = 0;
};

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum number of rounds q needs over every switch assignment.
WorstCaseResult worst_case_rounds(const Graph& g, int k, const Questioner& q, Goal goal,
                                  const WorstCaseOptions& opts = {});

struct BestResponseOptions {
  int max_askable = 16;
  /// Stop deepening once this many rounds are proven necessary (0: no limit).
  int stop_at = 0;
};

/// Fewest rounds any questioner needs against the fixed adversary. Question
/// sets range over unknown askable vertices.
int best_response_rounds(const Graph& g, int k, const Adversary& a, Goal goal,
                         const BestResponseOptions& opts = {});

int askable_count(const Graph& g);

}  // namespace switchquest
