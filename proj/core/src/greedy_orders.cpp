#include "colnum/greedy_orders.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <unordered_set>

namespace colnum {

namespace {

// Buckets of unplaced vertices keyed by potential-set size. Each bucket is
// ordered by a per-variant (key, id) pair; selection takes the extreme
// nonempty bucket. Sizes move by +-1 so the extreme pointer is cheap to keep.
class SizeBuckets {
 public:
  SizeBuckets(int n, int max_key) : buckets_(max_key + 1) { (void)n; }

  void insert(int size, std::pair<int, int> entry) {
    grow(size);
    buckets_[size].insert(entry);
  }
  void erase(int size, std::pair<int, int> entry) { buckets_[size].erase(entry); }
  void move(int from, int to, std::pair<int, int> entry) {
    buckets_[from].erase(entry);
    grow(to);
    buckets_[to].insert(entry);
  }
  // largest nonempty bucket index at or below hint, scanning down
  std::pair<int, std::pair<int, int>> take_max(int& hint) const {
    while (hint > 0 && buckets_[hint].empty()) --hint;
    return {hint, *buckets_[hint].begin()};
  }
  // smallest nonempty bucket index at or above hint, scanning up
  std::pair<int, std::pair<int, int>> take_min(int& hint) const {
    while (hint + 1 < (int)buckets_.size() && buckets_[hint].empty()) ++hint;
    return {hint, *buckets_[hint].begin()};
  }

 private:
  void grow(int size) {
    if (size >= (int)buckets_.size()) buckets_.resize(size + 1);
  }
  std::vector<std::set<std::pair<int, int>>> buckets_;
};

}  // namespace

Order order_greedy_wreach(const Graph& g, int r, GreedyWreachStats* stats,
                          const Deadline& deadline, const GreedyObserver& observer) {
  if (r < 1) throw std::invalid_argument("order_greedy_wreach: r must be >= 1");
  int n = g.vertex_count();
  std::vector<int> pot_size(n, 1);
  std::vector<char> placed(n, 0);
  SizeBuckets buckets(n, 1);
  for (int v = 0; v < n; ++v) buckets.insert(1, {-g.degree(v), v});
  int hint = 1;

  bool track_sets = static_cast<bool>(observer);
  std::vector<std::vector<int>> pot_sets;
  if (track_sets) {
    pot_sets.assign(n, {});
    for (int v = 0; v < n; ++v) pot_sets[v] = {v};
  }

  GreedyWreachStats local;
  std::vector<int> at;
  at.reserve(n);
  std::vector<int> dist(n, -1);
  std::vector<int> touched;
  for (int step = 0; step < n; ++step) {
    if ((step & 31) == 0) deadline.check();
    auto [size, entry] = buckets.take_max(hint);
    int v0 = entry.second;
    buckets.erase(size, entry);
    placed[v0] = 1;
    at.push_back(v0);
    local.sum_final_sizes += pot_size[v0];

    // Depth-r BFS from v0 among unplaced vertices; every reached vertex now
    // has v0 in its potential weakly reachable set.
    std::queue<int> q;
    dist[v0] = 0;
    touched.push_back(v0);
    q.push(v0);
    ++local.bfs_visits;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] >= r) continue;
      for (int w : g.neighbors(u)) {
        if (dist[w] != -1 || placed[w]) continue;
        dist[w] = dist[u] + 1;
        touched.push_back(w);
        q.push(w);
        ++local.bfs_visits;
        buckets.move(pot_size[w], pot_size[w] + 1, {-g.degree(w), w});
        ++pot_size[w];
        if (pot_size[w] > hint) hint = pot_size[w];
        if (track_sets) pot_sets[w].push_back(v0);
      }
    }
    for (int x : touched) dist[x] = -1;
    touched.clear();

    if (observer) {
      std::vector<std::vector<int>> snapshot(n);
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        snapshot[v] = pot_sets[v];
        std::sort(snapshot[v].begin(), snapshot[v].end());
      }
      observer(at, snapshot);
    }
  }
  if (stats) *stats = local;
  return Order(std::move(at));
}

Order order_greedy_sreach(const Graph& g, int r, const Deadline& deadline,
                          const GreedyObserver& observer) {
  if (r < 1) throw std::invalid_argument("order_greedy_sreach: r must be >= 1");
  int n = g.vertex_count();
  // With nothing placed yet, the strongly reachable set of v is {v} plus its
  // neighbors (length-1 paths have no inner vertices).
  std::vector<std::unordered_set<int>> pot(n);
  for (int v = 0; v < n; ++v) {
    pot[v].insert(v);
    pot[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  SizeBuckets buckets(n, n);
  for (int v = 0; v < n; ++v) buckets.insert((int)pot[v].size(), {g.degree(v), v});
  int hint = 1;

  std::vector<char> placed(n, 0);
  std::vector<int> at(n, -1);
  std::vector<int> dist(n, -1);
  std::vector<int> touched;
  for (int step = 0; step < n; ++step) {
    if ((step & 31) == 0) deadline.check();
    auto [size, entry] = buckets.take_min(hint);
    int v0 = entry.second;
    buckets.erase(size, entry);
    placed[v0] = 1;
    at[n - 1 - step] = v0;

    // Layer the potential set of v0 by shortest-path length from v0 through
    // already placed vertices. Unplaced vertices are recorded, not expanded.
    std::vector<std::vector<int>> layer(r + 1);
    std::queue<int> q;
    dist[v0] = 0;
    touched.push_back(v0);
    q.push(v0);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] >= r) continue;
      for (int w : g.neighbors(u)) {
        if (dist[w] != -1) continue;
        dist[w] = dist[u] + 1;
        touched.push_back(w);
        if (placed[w]) {
          q.push(w);
        } else {
          layer[dist[w]].push_back(w);
        }
      }
    }
    for (int x : touched) dist[x] = -1;
    touched.clear();

    auto resize = [&](int v, int delta) {
      int s = (int)pot[v].size();
      buckets.move(s, s + delta, {g.degree(v), v});
      if (s + delta < hint) hint = s + delta;
    };
    // members of S_i gain all of S_j whenever i+j <= r
    for (int i = 1; i + 1 <= r; ++i) {
      for (int j = 1; i + j <= r; ++j) {
        for (int v : layer[i]) {
          for (int w : layer[j]) {
            if (v == w || pot[v].count(w)) continue;
            resize(v, +1);
            pot[v].insert(w);
          }
        }
      }
    }
    // everyone loses the now-placed v0
    for (int i = 1; i <= r; ++i) {
      for (int v : layer[i]) {
        if (pot[v].count(v0)) {
          resize(v, -1);  // bucket move reads the size, erase after
          pot[v].erase(v0);
        }
      }
    }

    if (observer) {
      std::vector<std::vector<int>> snapshot(n);
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        snapshot[v].assign(pot[v].begin(), pot[v].end());
        std::sort(snapshot[v].begin(), snapshot[v].end());
      }
      std::vector<int> suffix;
      for (int p = n - 1; p >= n - 1 - step; --p) suffix.push_back(at[p]);
      observer(suffix, snapshot);
    }
  }
  return Order(std::move(at));
}

}  // namespace colnum
