#pragma once

#include <iosfwd>

#include "colnum/graph.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// Directed augmented graph with per-arc weights. Weight-w arcs appear
/// exactly at augmentation step w; step 1 is an orientation of the input
/// graph with every edge pointing to its L-earlier endpoint.
class DtfGraph {
 public:
  explicit DtfGraph(int n) : out_(n), in_(n) {}

  int vertex_count() const { return static_cast<int>(out_.size()); }
  int step() const { return step_; }
  bool has_arc(int u, int v) const;           // u -> v
  int weight(int u, int v) const;             // 0 when absent
  const std::vector<std::pair<int, int>>& out_arcs(int u) const { return out_[u]; }  // (target, w)
  const std::vector<std::pair<int, int>>& in_arcs(int v) const { return in_[v]; }    // (source, w)
  long long arc_count() const { return arcs_; }
  int max_out_degree() const;

  /// Underlying undirected graph (labels 0..n-1).
  Graph underlying() const;

  /// Debug dump, one "u v w" line per arc in (u, v) order, internal ids.
  void write_arcs(std::ostream& out) const;

  void add_arc(int u, int v, int w);
  void bump_step() { ++step_; }

 private:
  std::vector<std::vector<std::pair<int, int>>> out_, in_;
  long long arcs_ = 0;
  int step_ = 1;
};

/// Distance-constrained transitive-fraternal augmentation up to step r.
/// Fraternal pairs at step i come from weight splits (i-1, 1) only; the new
/// fraternal edges are oriented along the degeneracy order of the auxiliary
/// graph they form. Transitive arcs use all weight splits a+b = i. The
/// initial orientation follows the given order, or the degeneracy order of g
/// when none is supplied.
DtfGraph dtf_augment(const Graph& g, int r, const Deadline& deadline = {});
DtfGraph dtf_augment(const Graph& g, int r, const Order& initial, const Deadline& deadline = {});

/// Degeneracy order of the underlying undirected graph of dtf_augment(g, r).
Order order_from_dtf(const Graph& g, int r, const Deadline& deadline = {});

}  // namespace colnum
