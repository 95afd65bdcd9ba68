#pragma once

#include <cstdint>

#include "colnum/graph.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// Budget for the local search pass. Non-positive values mean "default":
/// max_no_improve defaults to 50*n consecutive rejected swaps per phase and
/// max_iterations to unlimited. The deadline, when armed, stops the search
/// and returns the best order found so far.
struct LsBudget {
  long long max_iterations = 0;
  long long max_no_improve = 0;
  std::uint64_t seed = 0;
  Deadline deadline;
};

/// Improves an order by repeated swaps. Phase one swaps a vertex attaining
/// the maximum |WReach_r| with a random earlier vertex; phase two swaps such
/// a vertex with its direct predecessor. A swap is kept only when the
/// objective (max size, number of vertices attaining it, total size)
/// improves lexicographically, so the returned order never evaluates worse
/// than the input. Phases alternate until neither improves.
Order local_search(const Graph& g, const Order& start, int r, const LsBudget& budget = {});

}  // namespace colnum
