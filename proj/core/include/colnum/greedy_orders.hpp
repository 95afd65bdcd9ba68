#pragma once

#include <functional>

#include "colnum/graph.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// Test hook: called after every placement with the vertices placed so far
/// (in placement order) and the current potential set of every unplaced
/// vertex (sorted). Potential sets are only materialized when a hook is set
/// for the WReach variant.
using GreedyObserver =
    std::function<void(const std::vector<int>& placed, const std::vector<std::vector<int>>& potentials)>;

struct GreedyWreachStats {
  long long bfs_visits = 0;       // vertices visited over all update searches
  long long sum_final_sizes = 0;  // total size of the constructed WReach sets
};

/// Left-to-right greedy: repeatedly places the unplaced vertex whose
/// potential weakly reachable set is largest (ties by larger degree, then
/// smaller id), then updates potentials with one depth-r BFS from the placed
/// vertex in the graph without the placed prefix. r >= 1.
Order order_greedy_wreach(const Graph& g, int r, GreedyWreachStats* stats = nullptr,
                          const Deadline& deadline = {}, const GreedyObserver& observer = {});

/// Right-to-left greedy: repeatedly places, at the largest unfilled position,
/// the vertex whose potential strongly reachable set is smallest (ties by
/// smaller degree, then smaller id). After placing v0 with potential set S,
/// S is split into layers S_1..S_r by shortest-path length from v0 through
/// placed vertices, every S_j is merged into the potential sets of S_i for
/// i+j <= r, and v0 is dropped from all potential sets. r >= 1.
Order order_greedy_sreach(const Graph& g, int r, const Deadline& deadline = {},
                          const GreedyObserver& observer = {});

}  // namespace colnum
