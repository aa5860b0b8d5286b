#pragma once

#include <memory>
#include <string>
#include <vector>

#include "switchquest/game.hpp"

namespace switchquest {

// Questioners -------------------------------------------------------------

/// Asks the flow frontier, one vertex per round.
std::unique_ptr<Questioner> questioner_follow_flow();

/// Asks unknown askable vertices by increasing distance from the frontier in
/// the restricted graph; a partial distance class is filled by ascending id.
std::unique_ptr<Questioner> questioner_algorithm_a();

/// Spine-following: asks the frontier and the next spine vertices (tag
/// "spine") up to k; off the spine it asks the frontier only.
std::unique_ptr<Questioner> questioner_algorithm_b();

/// Rooted trees: whole levels of the frontier's subtree while the cumulative
/// count fits in k.
std::unique_ptr<Questioner> questioner_tree_levels();

/// Pyramids: the top l levels of the sub-pyramid under the frontier.
/// Requires k >= l(l+1)/2.
std::unique_ptr<Questioner> questioner_pyramid_recursive(int l);

/// Pyramids, k = 2: three levels in two rounds.
std::unique_ptr<Questioner> questioner_pyramid_k2();

/// Layered graphs of constant width d: the frontier plus floor((k-1)/d)
/// complete levels below it.
std::unique_ptr<Questioner> questioner_layered_complete();

// Adversaries -------------------------------------------------------------

std::unique_ptr<Adversary> adversary_all_left();

/// Keeps a reduced working graph and a longest path in it; answers so that
/// the path loses at most one edge per question. Simple DAGs with no
/// out-degree-1 vertex, one question per round.
std::unique_ptr<Adversary> adversary_thm3_longest_path();

/// Fixes a longest (generalized, on cyclic graphs) path at reset and answers
/// its edges; every other vertex gets its first edge.
std::unique_ptr<Adversary> adversary_thm4_path_edge();

/// Rooted trees: answers toward the child whose subtree holds the fewest
/// vertices of the round's question set; ties go left.
std::unique_ptr<Adversary> adversary_tree_min_subtree();

/// Pyramids: answers in decreasing level order; the frontier is sent toward
/// the child with the shorter known continuation (ties left), everything else
/// left.
std::unique_ptr<Adversary> adversary_pyramid_shorter_side();

/// Generalized pyramids with the matching edge first in every out-list.
std::unique_ptr<Adversary> adversary_gpy_left_committing();

/// Protocol-testing adversary: answers left but drops the first answer.
std::unique_ptr<Adversary> adversary_omit_first();

// Introspection used by property tests.
int thm3_path_length(const Adversary& a);
long gpy_endpoint_hits(const Adversary& a);

// Registry ----------------------------------------------------------------

/// "name" or "name:key=value,...", e.g. "pyramid_recursive:l=2".
std::unique_ptr<Questioner> make_questioner(const std::string& spec);
std::unique_ptr<Adversary> make_adversary(const std::string& spec);
std::vector<std::string> questioner_names();
std::vector<std::string> adversary_names();

class UnknownStrategyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace switchquest
