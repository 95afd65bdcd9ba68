#pragma once

#include "colnum/graph.hpp"
#include "colnum/uqw.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// Binary classification tree over a vertex set: inserting an element walks
/// from the root, branching left when its distance to the node's vertex is
/// at most the threshold and right otherwise, and attaches it at the first
/// vacant address. Addresses are {0,1}-words, 0 = left.
struct DistanceTree {
  struct Node {
    int vertex;
    int left = -1;
    int right = -1;
    int parent = -1;
    int bit = 0;  // branch taken from the parent
  };
  std::vector<Node> nodes;  // nodes[0] is the root when nonempty
  int threshold = 2;

  bool empty() const { return nodes.empty(); }
};

enum class BranchKind { Left, Right };

/// Builds the tree by inserting the elements in the given enumeration order.
/// Distances are taken in ctx minus the removed vertices.
DistanceTree build_distance_tree(const Graph& ctx, const std::vector<int>& elements, int threshold,
                                 const std::vector<char>& removed = {});

/// The longest root-to-leaf path (ties towards the leftmost leaf address),
/// restricted to its longest contiguous single-direction subpath (ties
/// towards the topmost). Right chains are pairwise far, left chains lie
/// within the threshold of their path parent.
std::pair<std::vector<int>, BranchKind> longest_monotone_subpath(const DistanceTree& t);

enum class TreeVariant { Tree1, Tree2, LdIt };

/// Distance-tree based uniform quasi-wideness. Radius r is handled by
/// iterative deepening: an i-independent center set is grown for
/// i = 1, 2, ..., r, contracting disjoint balls around the current centers
/// into a quotient graph. Odd steps take a greedy independent set there;
/// even steps run the radius-2 engine, which alternates between extracting
/// far chains from a distance tree (candidate solutions) and deleting a
/// vertex adjacent to most of a near chain. Tree2 classifies the shrinking
/// working set, Tree1 re-classifies the step's full starting set against the
/// deletions so far, LdIt replaces chain extraction by a greedy independent
/// set of the squared quotient. The best candidate by score wins each step.
UqwResult uqw_tree(const Graph& g, const std::vector<int>& a, int r, TreeVariant variant,
                   const Deadline& deadline = {});

}  // namespace colnum
