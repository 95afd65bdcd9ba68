#pragma once

#include <cstdint>

#include "colnum/graph.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// The naive ordering heuristics, optionally applied to the r-th power graph.
struct SimpleVariant {
  enum Kind { DegreeDesc, Degeneracy, Random, PowerDegreeDesc, PowerDegeneracy };
  Kind kind = DegreeDesc;
  int radius = 1;              // Power* kinds only, >= 1
  std::uint64_t seed = 0;      // Random only
};

Order order_simple(const Graph& g, const SimpleVariant& variant, const Deadline& deadline = {});

/// Minimum-degree elimination order, built from the last position backwards.
/// At each step the vertex of minimum degree in the elimination graph (ties
/// by id) is placed at the largest unfilled position, removed, and its
/// neighborhood turned into a clique. If max_back_degree is non-null it
/// receives the largest residual degree seen at removal; max |SReach_inf| of
/// the returned order equals that value plus one.
Order order_min_degree_elimination(const Graph& g, int* max_back_degree = nullptr,
                                   const Deadline& deadline = {});

/// Recursive separator-based decomposition: find a minimal close separator,
/// improve it through the neighborhood-of-component refinement until the
/// largest remaining component stops shrinking, order the separator first
/// (degree descending) and recurse into the components. Cliques and graphs
/// without a usable separator are ordered by degree descending. If
/// forest_height is non-null it receives the height of the recursion's
/// elimination forest (separator sizes summed along the deepest branch).
Order order_treedepth_heuristic(const Graph& g, int* forest_height = nullptr,
                                const Deadline& deadline = {});

}  // namespace colnum
