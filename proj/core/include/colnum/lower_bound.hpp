#pragma once

#include <iosfwd>

#include "colnum/graph.hpp"

namespace colnum {

/// Adversarial instance: a graph whose edges all join ancestor-descendant
/// pairs of its spanning tree T. The tree has branching degree d = mprime-1
/// and depth c = binomial(k+r, r) in the base cases; recursive instances may
/// run deeper. truncate_depth caps the tree depth for desk-scale testing;
/// truncated instances are excluded from the vertex-count bound.
struct LbInstance {
  Graph graph;
  std::vector<int> parent;  // tree parent per vertex, -1 at the root
  int k = 1, r = 1, mprime = 2;
  int c = 0;          // binomial(k+r, r)
  int d = 1;          // branching degree, mprime - 1
  int depth = 0;      // actual tree depth (edges) of this instance
  bool truncated = false;

  std::vector<int> ancestors(int v) const;  // nearest first, root last
};

long long binomial(int n, int k);

/// Builds the instance: k = 1 gives the plain tree, r = 1 the full
/// ancestor-descendant closure, and k, r >= 2 attaches d copies of the
/// (k-1, r) instance below every leaf of the (k, r-1) tree, each copy fully
/// adjacent to its leaf. Throws std::invalid_argument unless mprime > c.
/// truncate_depth < 0 means no truncation.
LbInstance generate_lb(int k, int r, int mprime, int truncate_depth = -1);

struct LbReport {
  bool closure_ok = false;       // every edge joins an ancestor-descendant pair
  bool shape_ok = false;         // depth as expected, every internal node has d children
  bool size_ok = false;          // |V| >= (mprime-1)^c; skipped when truncated
  bool size_checked = false;
  bool path_reach_ok = false;    // every ancestor reachable within r along the tree path
  bool subtree_diameter_ok = false;  // every subtree induces diameter <= 2r
  bool zb_bound_ok = false;      // |B| <= |Z| mprime + 1 over all |Z| <= 2; brute force
  bool zb_checked = false;
  bool wcol_ok = false;          // exact_wcol == c on tiny instances
  bool wcol_checked = false;

  bool all_ok() const {
    return closure_ok && shape_ok && (!size_checked || size_ok) && path_reach_ok &&
           subtree_diameter_ok && (!zb_checked || zb_ok()) && (!wcol_checked || wcol_ok);
  }
  bool zb_ok() const { return zb_bound_ok; }
};

/// Verifies the stated properties. The (Z, B) brute force runs only when the
/// instance has at most exhaustive_limit vertices; the exact wcol check only
/// when it has at most 9.
LbReport check_lb_properties(const LbInstance& inst, int exhaustive_limit);

/// Edge list plus a "child parent" sidecar line per vertex (-1 for the root).
void write_lb_instance(const LbInstance& inst, std::ostream& edges, std::ostream& tree);

}  // namespace colnum
