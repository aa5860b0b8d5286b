#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "switchquest/game.hpp"

namespace switchquest {

struct SolverConfig {
  int max_askable = 16;
  /// Canonicalize memo keys under the pyramid mirror map when the graph has one.
  bool symmetry_reduction = false;
  /// Evaluate root question sets on several threads sharing the memo table.
  bool parallel = false;
  int threads = 0;  // 0: hardware concurrency (at least 2)
  /// Enumerate every optimal first question set.
  bool first_moves = true;
};

struct SolveStats {
  std::size_t states = 0;
  std::size_t memo_hits = 0;
  double ms = 0.0;
  bool symmetry_used = false;
};

struct SolveResult {
  int value = 0;
  /// Sorted by size, then by vertex index. Empty when value is 0.
  std::vector<std::vector<VertexIndex>> optimal_first_moves;
  SolveStats stats;
};

class SolverCapExceeded : public std::runtime_error {
 public:
  SolverCapExceeded(const std::string& what, int askable)
      : std::runtime_error(what), askable_(askable) {}
  int askable() const { return askable_; }

 private:
  int askable_;
};

/// Minimum number of rounds of at most k questions that determine the goal
/// against every switch assignment. Cyclic graphs are accepted for the path
/// goal, where a flow that closes a cycle counts as determined.
SolveResult solve_exact(const Graph& g, int k, Goal goal, const SolverConfig& cfg = {});

/// (k, value) for k = 1..k_max.
std::vector<std::pair<int, int>> solve_curve(const Graph& g, int k_max, Goal goal,
                                             const SolverConfig& cfg = {});

Json solve_to_json(const Graph& g, const SolveResult& r);

}  // namespace switchquest
