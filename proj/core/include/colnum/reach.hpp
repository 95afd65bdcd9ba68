#pragma once

#include <vector>

#include "colnum/graph.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// Per-vertex weakly (or strongly) r-reachable sets under an order, plus the
/// maximum set size. Every set contains the vertex itself; all members are
/// L-smaller or equal.
struct ReachProfile {
  std::vector<std::vector<int>> sets;
  int max_size = 0;

  int size_of(int v) const { return static_cast<int>(sets[v].size()); }
};

/// WReach_r[G,L,v] for every v: vertices u reachable from v by a path of
/// length <= r on which u is the L-minimum. Computed by one bounded BFS per
/// source u restricted to vertices L-greater than u. r >= 1.
ReachProfile wreach_sets(const Graph& g, const Order& order, int r, const Deadline& deadline = {});

/// SReach_r[G,L,v] for every v: {v} plus vertices u <_L v joined to v by a
/// path of length <= r whose only vertex smaller than v is u. r >= 1.
ReachProfile sreach_sets(const Graph& g, const Order& order, int r, const Deadline& deadline = {});

/// max_v |WReach_r[G,L,v]| without materializing the sets.
int wcol_of_order(const Graph& g, const Order& order, int r, const Deadline& deadline = {});

/// max_v |SReach_r[G,L,v]|.
int col_of_order(const Graph& g, const Order& order, int r, const Deadline& deadline = {});

/// Exact wcol_r by branch-and-bound over all orders, with the witnessing
/// order. Prefixes whose running maximum already meets the best known bound
/// are abandoned. Refuses graphs with more than max_n vertices.
std::pair<int, Order> exact_wcol(const Graph& g, int r, int max_n = 9);

}  // namespace colnum
