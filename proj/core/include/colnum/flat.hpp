#pragma once

#include <cstdint>
#include <string>

#include "colnum/graph.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// One of the 18 flat decomposition configurations: how the BFS root of the
/// next piece is chosen, how vertices inside a piece are ordered, and whether
/// that inner order is reversed.
struct FlatConfig {
  enum RootChoice {
    MaxNeighborsInProcessed = 1,      // most neighbors in already processed pieces
    MaxDegreeInC = 2,                 // maximum degree in the remainder component
    MaxDegreeAdjacentToProcessed = 3  // as (2), restricted to vertices touching processed pieces
  };
  enum InnerOrder { BFS, DFS, SortByDegreeDesc };

  RootChoice root_choice = MaxDegreeInC;
  InnerOrder inner_order = SortByDegreeDesc;
  bool reversed = false;

  std::string name() const;
};

/// Parses "flat:<root>:<inner>:<rev>" with root in 1..3, inner in
/// {bfs,dfs,sort}, rev in {0,1}; throws std::invalid_argument otherwise.
FlatConfig parse_flat_config(const std::string& spec);

/// Ordered partition of V(G) into connected pieces. Each piece H_{q+1} is the
/// minimal subtree of a BFS tree of the current remainder component that
/// joins the root with one contact vertex per adjacent processed piece.
struct FlatDecomposition {
  std::vector<std::vector<int>> pieces;  // vertex sets H_1..H_l, each sorted
  std::vector<int> roots;                // BFS root of each piece
  std::vector<std::vector<int>> contacts;  // designated contact vertices per piece
  std::vector<std::vector<std::pair<int, int>>> tree_edges;  // (child, parent) per piece
};

FlatDecomposition flat_decompose(const Graph& g, const FlatConfig& cfg, std::uint64_t seed = 0,
                                 const Deadline& deadline = {});

/// Concatenates the pieces; vertices inside each piece follow cfg.inner_order
/// (BFS/DFS from the piece root, or degree descending), reversed per piece if
/// cfg.reversed.
Order order_flat(const Graph& g, const FlatConfig& cfg, std::uint64_t seed = 0,
                 const Deadline& deadline = {});

}  // namespace colnum
