#include "colnum/reach.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace colnum {

namespace {

// Visits the vertices reachable from src within distance r using only
// vertices with pos >= pos[src], src included, and calls fn on each.
template <typename Fn>
void bfs_suffix(const Graph& g, const Order& order, int src, int r, std::vector<int>& dist,
                std::vector<int>& touched, Fn&& fn) {
  const int src_pos = order.pos[src];
  std::queue<int> q;
  dist[src] = 0;
  touched.push_back(src);
  q.push(src);
  fn(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] >= r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1 || order.pos[w] < src_pos) continue;
      dist[w] = dist[u] + 1;
      touched.push_back(w);
      q.push(w);
      fn(w);
    }
  }
  for (int v : touched) dist[v] = -1;
  touched.clear();
}

}  // namespace

ReachProfile wreach_sets(const Graph& g, const Order& order, int r, const Deadline& deadline) {
  if (r < 1) throw std::invalid_argument("wreach_sets: r must be >= 1");
  int n = g.vertex_count();
  ReachProfile profile;
  profile.sets.assign(n, {});
  std::vector<int> dist(n, -1), touched;
  for (int p = 0; p < n; ++p) {
    if ((p & 255) == 0) deadline.check();
    int u = order.at[p];
    bfs_suffix(g, order, u, r, dist, touched, [&](int v) { profile.sets[v].push_back(u); });
  }
  for (int v = 0; v < n; ++v) {
    std::sort(profile.sets[v].begin(), profile.sets[v].end());
    profile.max_size = std::max(profile.max_size, profile.size_of(v));
  }
  return profile;
}

int wcol_of_order(const Graph& g, const Order& order, int r, const Deadline& deadline) {
  if (r < 1) throw std::invalid_argument("wcol_of_order: r must be >= 1");
  int n = g.vertex_count();
  std::vector<int> count(n, 0), dist(n, -1), touched;
  for (int p = 0; p < n; ++p) {
    if ((p & 255) == 0) deadline.check();
    int u = order.at[p];
    bfs_suffix(g, order, u, r, dist, touched, [&](int v) { ++count[v]; });
  }
  int best = 0;
  for (int v = 0; v < n; ++v) best = std::max(best, count[v]);
  return best;
}

ReachProfile sreach_sets(const Graph& g, const Order& order, int r, const Deadline& deadline) {
  if (r < 1) throw std::invalid_argument("sreach_sets: r must be >= 1");
  int n = g.vertex_count();
  ReachProfile profile;
  profile.sets.assign(n, {});
  // From each v, BFS through vertices strictly L-greater than v; a smaller
  // vertex u reached this way enters SReach(v) and is not expanded.
  std::vector<int> dist(n, -1), touched;
  for (int v = 0; v < n; ++v) {
    if ((v & 255) == 0) deadline.check();
    const int vp = order.pos[v];
    profile.sets[v].push_back(v);
    std::queue<int> q;
    dist[v] = 0;
    touched.push_back(v);
    q.push(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] >= r) continue;
      for (int w : g.neighbors(u)) {
        if (dist[w] != -1) continue;
        dist[w] = dist[u] + 1;
        touched.push_back(w);
        if (order.pos[w] < vp) {
          profile.sets[v].push_back(w);  // endpoint, not expanded
        } else {
          q.push(w);
        }
      }
    }
    for (int x : touched) dist[x] = -1;
    touched.clear();
    std::sort(profile.sets[v].begin(), profile.sets[v].end());
  }
  for (int v = 0; v < n; ++v)
    profile.max_size = std::max(profile.max_size, profile.size_of(v));
  return profile;
}

int col_of_order(const Graph& g, const Order& order, int r, const Deadline& deadline) {
  return sreach_sets(g, order, r, deadline).max_size;
}

namespace {

// State for the exact search. Reach masks are over <= max_n vertices.
struct ExactSearch {
  const Graph& g;
  int r;
  int n;
  std::vector<int> prefix;        // vertices placed so far, in order
  std::vector<char> placed;
  std::vector<std::uint32_t> reach;  // reach[i]: ball of prefix[i] among vertices not placed before it
  std::vector<int> wreach_size;   // |WReach| of prefix[i], fixed at placement
  int best = 0;
  std::vector<int> best_order;

  ExactSearch(const Graph& g_, int r_) : g(g_), r(r_), n(g_.vertex_count()) {
    placed.assign(n, 0);
  }

  std::uint32_t restricted_ball(int v) const {
    // BFS from v avoiding already placed vertices.
    std::uint32_t seen = 0;
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[v] = 0;
    seen |= 1u << v;
    q.push(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] >= r) continue;
      for (int w : g.neighbors(u)) {
        if (dist[w] != -1 || placed[w]) continue;
        dist[w] = dist[u] + 1;
        seen |= 1u << w;
        q.push(w);
      }
    }
    return seen;
  }

  void run() {
    // Greedy degeneracy order gives the initial upper bound.
    auto [l, d] = degeneracy_order(g);
    best = wcol_of_order(g, l, r);
    best_order = l.at;
    dfs(0, 0);
  }

  void dfs(int depth, int running_max) {
    if (running_max >= best) return;  // cannot strictly improve
    if (depth == n) {
      best = running_max;
      best_order = prefix;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::uint32_t b = restricted_ball(v);
      int size = 1;
      for (size_t i = 0; i < prefix.size(); ++i)
        if (reach[i] & (1u << v)) ++size;
      placed[v] = 1;
      prefix.push_back(v);
      reach.push_back(b);
      wreach_size.push_back(size);
      dfs(depth + 1, std::max(running_max, size));
      placed[v] = 0;
      prefix.pop_back();
      reach.pop_back();
      wreach_size.pop_back();
    }
  }
};

}  // namespace

std::pair<int, Order> exact_wcol(const Graph& g, int r, int max_n) {
  if (r < 1) throw std::invalid_argument("exact_wcol: r must be >= 1");
  if (g.vertex_count() > max_n || g.vertex_count() > 31)
    throw std::invalid_argument("exact_wcol: graph has " + std::to_string(g.vertex_count()) +
                                " vertices, limit is " + std::to_string(std::min(max_n, 31)));
  if (g.vertex_count() == 0) return {0, Order()};
  ExactSearch search(g, r);
  search.run();
  return {search.best, Order(search.best_order)};
}

}  // namespace colnum
