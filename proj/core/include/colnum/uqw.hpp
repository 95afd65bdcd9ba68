#pragma once

#include <iosfwd>

#include "colnum/graph.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// Output of a uniform quasi-wideness algorithm: deleted vertices S and an
/// r-independent set B \subseteq A \ S of the graph without S, together with
/// the start set A and radius they were computed for. All vertex lists are
/// sorted.
struct UqwResult {
  std::vector<int> deleted;      // S
  std::vector<int> independent;  // B
  std::vector<int> source;       // A
  int radius = 1;
};

/// True iff independent is contained in source minus deleted, is disjoint
/// from deleted, and is r-independent in G - deleted (bounded BFS per member).
bool verify_uqw(const Graph& g, const UqwResult& res);

/// r-distance profile of v on S: capped dist_G(v, a) for each a of S in
/// order, with r+1 standing for "infinite". With in_deleted_graph the
/// distances are taken in G - S instead.
std::vector<int> distance_profile(const Graph& g, const std::vector<int>& deleted, int v, int r,
                                  bool in_deleted_graph = false);

/// Size of the largest class of independent-set members sharing a distance
/// profile on the deleted set; |B| when S is empty. Throws
/// std::invalid_argument when the result does not verify.
int score(const Graph& g, const UqwResult& res, bool in_deleted_graph = false);

/// Like score but without the validity check; used to rank candidate
/// solutions inside the algorithms.
int profile_score(const Graph& g, const std::vector<int>& deleted,
                  const std::vector<int>& independent, int r, bool in_deleted_graph = false);

/// Greedy maximal independent set of G[A]: repeatedly take a vertex of
/// minimum degree (ties by id), add it, drop its closed neighborhood.
std::vector<int> greedy_independent_set(const Graph& g, const std::vector<int>& a);

/// The "least degree on power graph" heuristic: for k = 0..K delete the k
/// highest-degree vertices S_k (ties by id), greedily pick an independent set
/// of (G - S_k)^r restricted to A \ S_k, and keep the best-scoring (S_k, B_k),
/// ties towards smaller k.
UqwResult uqw_ld(const Graph& g, const std::vector<int>& a, int r, int k_max = 20,
                 const Deadline& deadline = {});

/// Two-line serialization "S: <labels>" / "B: <labels>".
void write_uqw_result(const Graph& g, const UqwResult& res, std::ostream& out);
UqwResult read_uqw_result(const Graph& g, std::istream& in, int radius);

}  // namespace colnum
