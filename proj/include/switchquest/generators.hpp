#pragma once

#include <cstdint>

#include "switchquest/graph.hpp"

namespace switchquest {

/// Complete d-ary tree on n+1 levels. Vertex "t<level>_<pos>", level tag set.
Graph gen_tree(int d, int n);

/// Pyramid Py(n): levels 1..n+1, level i holds v<i>_1..v<i>_i; out-list of
/// v<i>_<j> is [v<i+1>_<j>, v<i+1>_<j+1>]. Tags "i" and "j" carry coordinates.
Graph gen_pyramid(int n);
/// All vertices of Py(n): (n+1)(n+2)/2.
long long pyramid_vertex_count(int n);
/// Non-sink vertices of Py(n): n(n+1)/2.
long long pyramid_nonsink_count(int n);

/// Generalized pyramid with d vertices on every non-first level, each
/// non-sink joined to the whole next level. The matching edge (same position)
/// is first in every out-list.
Graph gen_gpy_complete(int d, int n);

/// d-dimensional lattice pyramid: non-negative points with coordinate sum
/// at most n, an edge per unit step. The +first-coordinate step is first.
Graph gen_gpy_grid(int d, int n);

/// Spine x1..x_{kl+1}; every x_i with i <= kl also points to its own sink s_i.
/// Spine vertices carry the tag "spine" = index; the spine edge is first.
Graph gen_hl(int k, int l);

/// Spine x1..x_{kl+1}; each x_i with i < kl has k-1 extra children with two
/// sink children each; x_{kl} has k-1 extra sink children.
Graph gen_algb_example(int k, int l);

/// Path p1..pn, each p_i (i < n) with an extra sink child q_i; p_n roots a
/// complete binary tree with n levels.
Graph gen_tree_remark(int n);

/// k-ary tree with l levels whose nodes are copies of H_1 (spine of length k
/// with sink children). The last spine vertex of a non-leaf copy points to the
/// first spine vertex of each of its k child copies.
Graph gen_tree_of_h(int k, int l);

/// Seeded random single-source DAG; non-sink out-degrees in [min_outdeg, max_outdeg].
Graph random_dag(int n_vertices, int max_outdeg, int min_outdeg, bool multigraph,
                 std::uint64_t seed);

/// Seeded random multigraph with at least one directed cycle. Every vertex is
/// reachable from the in-degree-0 source; non-sinks have out-degree in
/// [2, max_outdeg]; self-loops and back edges allowed.
Graph random_cyclic_multigraph(int n_vertices, int max_outdeg, std::uint64_t seed);

}  // namespace switchquest
