#include "colnum/local_search.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <queue>

namespace colnum {

namespace {

// Incrementally maintained evaluation of one order: per-source reach sets
// (reach[w] = vertices x with w in WReach_r(x)), per-vertex WReach sizes and
// the (max, count at max, sum) objective.
class LsState {
 public:
  LsState(const Graph& g, Order order, int r)
      : g_(g), order_(std::move(order)), r_(r), n_(g.vertex_count()) {
    reach_.assign(n_, {});
    wsize_.assign(n_, 0);
    cnt_.assign(n_ + 2, 0);
    for (int w = 0; w < n_; ++w) reach_[w] = suffix_ball(w);
    for (int w = 0; w < n_; ++w)
      for (int x : reach_[w]) ++wsize_[x];
    for (int x = 0; x < n_; ++x) {
      ++cnt_[wsize_[x]];
      total_ += wsize_[x];
      maxw_ = std::max(maxw_, wsize_[x]);
    }
  }

  const Order& order() const { return order_; }
  int max_wreach() const { return maxw_; }

  std::vector<int> vertices_at_max() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (wsize_[v] == maxw_) out.push_back(v);
    return out;
  }

  // Swaps the vertices at positions p and q; the swap is kept unless the
  // objective worsens (plateau moves keep the search off local stalls).
  // affected_sources lists every w whose reach set may change. Returns true
  // only on strict improvement.
  bool try_swap(int p, int q, const std::vector<int>& affected_sources) {
    auto before = objective();
    order_.swap_positions(p, q);

    std::vector<std::pair<int, std::vector<int>>> saved;
    std::vector<std::pair<int, int>> journal;  // (vertex, old wsize)
    for (int w : affected_sources) {
      std::vector<int> fresh = suffix_ball(w);
      if (fresh == reach_[w]) continue;
      // two-pointer diff of sorted old/new
      const auto& old = reach_[w];
      size_t i = 0, j = 0;
      while (i < old.size() || j < fresh.size()) {
        if (j == fresh.size() || (i < old.size() && old[i] < fresh[j])) {
          bump(old[i], -1, journal);
          ++i;
        } else if (i == old.size() || fresh[j] < old[i]) {
          bump(fresh[j], +1, journal);
          ++j;
        } else {
          ++i;
          ++j;
        }
      }
      saved.emplace_back(w, std::move(reach_[w]));
      reach_[w] = std::move(fresh);
    }
    while (maxw_ > 0 && cnt_[maxw_] == 0) --maxw_;

    if (objective() < before) return true;
    if (objective() == before) return false;  // kept, but not an improvement

    // revert
    order_.swap_positions(p, q);
    for (auto& [w, old] : saved) reach_[w] = std::move(old);
    for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
      auto [x, old_size] = *it;
      total_ += old_size - wsize_[x];
      --cnt_[wsize_[x]];
      ++cnt_[old_size];
      wsize_[x] = old_size;
      maxw_ = std::max(maxw_, old_size);
    }
    while (maxw_ > 0 && cnt_[maxw_] == 0) --maxw_;
    return false;
  }

 private:
  std::tuple<int, int, long long> objective() const { return {maxw_, cnt_[maxw_], total_}; }

  void bump(int x, int delta, std::vector<std::pair<int, int>>& journal) {
    journal.emplace_back(x, wsize_[x]);
    total_ += delta;
    --cnt_[wsize_[x]];
    wsize_[x] += delta;
    if ((int)cnt_.size() <= wsize_[x]) cnt_.resize(wsize_[x] + 1, 0);
    ++cnt_[wsize_[x]];
    maxw_ = std::max(maxw_, wsize_[x]);
  }

  // Sorted vertices reachable from w within r among positions >= pos(w).
  std::vector<int> suffix_ball(int w) const {
    std::vector<int> out;
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    dist[w] = 0;
    q.push(w);
    out.push_back(w);
    const int wp = order_.pos[w];
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] >= r_) continue;
      for (int t : g_.neighbors(u)) {
        if (dist[t] != -1 || order_.pos[t] < wp) continue;
        dist[t] = dist[u] + 1;
        out.push_back(t);
        q.push(t);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const Graph& g_;
  Order order_;
  int r_, n_;
  std::vector<std::vector<int>> reach_;
  std::vector<int> wsize_;
  std::vector<int> cnt_;
  int maxw_ = 0;
  long long total_ = 0;
};

}  // namespace

Order local_search(const Graph& g, const Order& start, int r, const LsBudget& budget) {
  if (r < 1) throw std::invalid_argument("local_search: r must be >= 1");
  int n = g.vertex_count();
  if (n <= 1) return start;

  long long max_no_improve = budget.max_no_improve > 0 ? budget.max_no_improve : 50LL * n;
  long long max_iterations = budget.max_iterations > 0 ? budget.max_iterations : LLONG_MAX;
  Rng rng(budget.seed);
  LsState state(g, start, r);
  long long iterations = 0;

  auto run_phase = [&](int rule) -> long long {
    long long fails = 0, accepted = 0;
    while (fails < max_no_improve && iterations < max_iterations && !budget.deadline.expired()) {
      ++iterations;
      auto at_max = state.vertices_at_max();
      int v = at_max[rng.below_int((int)at_max.size())];
      int pv = state.order().pos[v];
      if (pv == 0) {
        ++fails;
        continue;
      }
      int pu = rule == 1 ? rng.below_int(pv) : pv - 1;
      int u = state.order().at[pu];
      std::vector<int> affected;
      if (rule == 1) {
        affected = ball(g, u, r);
        std::vector<int> bv = ball(g, v, r);
        affected.insert(affected.end(), bv.begin(), bv.end());
        std::sort(affected.begin(), affected.end());
        affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
      } else {
        affected = {std::min(u, v), std::max(u, v)};
      }
      if (state.try_swap(pu, pv, affected)) {
        ++accepted;
        fails = 0;
      } else {
        ++fails;
      }
    }
    return accepted;
  };

  for (;;) {
    long long improved = run_phase(1);
    improved += run_phase(2);
    if (improved == 0 || iterations >= max_iterations || budget.deadline.expired()) break;
  }
  return state.order();
}

}  // namespace colnum
