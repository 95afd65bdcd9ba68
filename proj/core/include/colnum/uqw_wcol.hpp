#pragma once

#include "colnum/graph.hpp"
#include "colnum/uqw.hpp"
#include "colnum/util.hpp"

namespace colnum {

/// Conflict-graph independent set refined by halving: processes a greedy
/// independent set of the WReach-conflict graph in decreasing L order; a
/// vertex reaching more than half of the remaining members has its weakly
/// reachable set deleted and the process continues on the reached half,
/// otherwise it continues on the unreached part. |S| stays within c(c-1)
/// for c = max |WReach_r|.
UqwResult uqw_mfcs(const Graph& g, const std::vector<int>& a, int r, const Order& order,
                   const Deadline& deadline = {});

enum class TgvVariant {
  New1,   // conflict = the WReach_r sets intersect
  New2,   // conflict = distance <= r in G - S
  NewLd,  // as New2, plus greedy completion of the partial solution after every step
};

struct TgvDiagnostics {
  int wreach_bound = 0;            // c = max |WReach_r[G,L,.]|
  int max_deletions_pre_rollback = 0;  // max |S| over threshold runs before rollback
  bool step_bound_ok = true;       // every deletion step kept |A'| >= t|A|/c - 1
};

/// Growth/deletion state machine swept over thresholds j/(k+1), j = 1..k.
/// A growth step moves the L-least active vertex into B when its conflict
/// fraction is at most the threshold; otherwise the vertex appearing in the
/// most weakly reachable sets of active vertices is deleted and the active
/// set shrinks to the vertices that contain it. Trailing deletion-only
/// suffixes are rolled back. Returns the best candidate by score.
UqwResult uqw_tgv(const Graph& g, const std::vector<int>& a, int r, const Order& order,
                  TgvVariant variant, int k_thresholds = 9, TgvDiagnostics* diag = nullptr,
                  const Deadline& deadline = {});

}  // namespace colnum
