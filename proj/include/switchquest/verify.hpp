#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "switchquest/game.hpp"
#include "switchquest/graph_io.hpp"
#include "switchquest/solver.hpp"

namespace switchquest {

enum class Budget { kSmall, kFull };

const char* to_string(Budget b);
Budget parse_budget(std::string_view text);

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = true;
  /// Empirical finding without pass/fail semantics.
  bool report_only = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  Budget budget = Budget::kSmall;
  std::vector<CheckResult> checks;
  bool complete = true;
  double ms = 0.0;

  bool passed() const;
};

/// Solver values keyed by (graph, k, goal), shared between checks so the
/// property checks can reuse every value computed earlier.
class ValueCache {
 public:
  int value(const Graph& g, int k, Goal goal);
  /// Every cached graph with its known values.
  struct Instance {
    Graph graph;
    std::map<std::pair<int, Goal>, int> values;
  };
  std::vector<Instance> instances() const;
  std::size_t size() const;

 private:
  static std::string key_of(const Graph& g);
  mutable std::mutex mutex_;
  std::map<std::string, Instance> cache_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Grouped checks; each returns one CheckResult per instance or claim.
std::vector<CheckResult> check_longest_path_oracle(std::uint64_t seed, Budget b, ValueCache& cache);
std::vector<CheckResult> check_longest_path_adversary(std::uint64_t seed, Budget b);
std::vector<CheckResult> check_reduced_simple(std::uint64_t seed, Budget b, ValueCache& cache);
std::vector<CheckResult> check_reduced_multi(std::uint64_t seed, Budget b, ValueCache& cache);
std::vector<CheckResult> check_path_edge_adversary(std::uint64_t seed, Budget b);
std::vector<CheckResult> check_cyclic(std::uint64_t seed, Budget b, ValueCache& cache);
std::vector<CheckResult> check_order_independence(std::uint64_t seed, Budget b);
std::vector<CheckResult> check_tree_exact(Budget b, ValueCache& cache);
std::vector<CheckResult> check_pyramid_exact(Budget b, ValueCache& cache);
std::vector<CheckResult> check_adversary_tree(Budget b);
std::vector<CheckResult> check_adversary_pyramid(Budget b);
std::vector<CheckResult> check_adversary_gpy(Budget b);
std::vector<CheckResult> check_duel_tree(Budget b);
std::vector<CheckResult> check_duel_pyramid(Budget b);
std::vector<CheckResult> check_layered_upper(Budget b);
std::vector<CheckResult> check_hl(Budget b, ValueCache& cache);
std::vector<CheckResult> check_remark_tree(ValueCache& cache);
/// value(k+1) <= value(k), sink <= path and the ratio bound on every cached
/// graph; missing neighbouring values are solved and cached.
std::vector<CheckResult> check_ratio_properties(ValueCache& cache);
/// Report-only probes.
std::vector<CheckResult> probe_conjecture(Budget b);
std::vector<CheckResult> probe_gpy_on_pyramids(Budget b);

std::vector<std::string> suite_names();
/// Unknown names throw std::invalid_argument.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, Budget budget);
Json report_to_json(const SuiteReport& r);

}  // namespace switchquest
