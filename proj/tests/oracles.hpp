#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph type and the match runner.

#include <vector>

#include "switchquest/game.hpp"
#include "switchquest/graph.hpp"

namespace oracle {

using switchquest::Goal;
using switchquest::Graph;

/// Minimax over every subset of at most k unknown askable vertices, with
/// determination decided by enumerating all completions of the partial
/// assignment. Acyclic graphs with few askable vertices only.
int value(const Graph& g, int k, Goal goal);

/// Longest path from the source, by enumerating every path.
int longest_path(const Graph& g);

/// Max rounds of q over every switch assignment.
int worst_case(const Graph& g, int k, const switchquest::Questioner& q, Goal goal);

/// Every full switch assignment (slot per vertex, -1 on sinks).
std::vector<std::vector<int>> all_assignments(const Graph& g);

/// reach[x][y]: y reachable from x (reflexive).
std::vector<std::vector<char>> reachability(const Graph& g);

}  // namespace oracle
