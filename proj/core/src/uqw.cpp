#include "colnum/uqw.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

namespace colnum {

namespace {

// Bounded BFS distances from v in G - forbidden, capped at r (absent = -1).
std::vector<int> capped_distances(const Graph& g, int v, int r, const std::vector<char>& forbidden) {
  std::vector<int> dist(g.vertex_count(), -1);
  if (!forbidden.empty() && forbidden[v]) return dist;
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] >= r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1) continue;
      if (!forbidden.empty() && forbidden[w]) continue;
      dist[w] = dist[u] + 1;
      q.push(w);
    }
  }
  return dist;
}

}  // namespace

bool verify_uqw(const Graph& g, const UqwResult& res) {
  int n = g.vertex_count();
  std::vector<char> in_s(n, 0), in_a(n, 0), in_b(n, 0);
  for (int v : res.deleted) in_s[v] = 1;
  for (int v : res.source) in_a[v] = 1;
  for (int v : res.independent) {
    if (in_b[v]) return false;  // duplicate
    in_b[v] = 1;
  }
  for (int v : res.independent)
    if (!in_a[v] || in_s[v]) return false;
  for (int v : res.independent) {
    auto dist = capped_distances(g, v, res.radius, in_s);
    for (int u : res.independent)
      if (u != v && dist[u] != -1) return false;
  }
  return true;
}

std::vector<int> distance_profile(const Graph& g, const std::vector<int>& deleted, int v, int r,
                                  bool in_deleted_graph) {
  std::vector<char> forbidden;
  if (in_deleted_graph) {
    forbidden.assign(g.vertex_count(), 0);
    for (int s : deleted) forbidden[s] = 1;
    forbidden[v] = 0;  // the profile owner itself is never blocked
  }
  auto dist = capped_distances(g, v, r, forbidden);
  std::vector<int> profile;
  profile.reserve(deleted.size());
  for (int s : deleted) profile.push_back(dist[s] == -1 ? r + 1 : dist[s]);
  return profile;
}

int profile_score(const Graph& g, const std::vector<int>& deleted,
                  const std::vector<int>& independent, int r, bool in_deleted_graph) {
  if (deleted.empty()) return static_cast<int>(independent.size());
  std::map<std::vector<int>, int> classes;
  int best = 0;
  for (int v : independent) {
    int& c = classes[distance_profile(g, deleted, v, r, in_deleted_graph)];
    best = std::max(best, ++c);
  }
  return best;
}

int score(const Graph& g, const UqwResult& res, bool in_deleted_graph) {
  if (!verify_uqw(g, res)) throw std::invalid_argument("score: result fails verify_uqw");
  return profile_score(g, res.deleted, res.independent, res.radius, in_deleted_graph);
}

std::vector<int> greedy_independent_set(const Graph& g, const std::vector<int>& a) {
  int n = g.vertex_count();
  std::vector<char> active(n, 0);
  for (int v : a) active[v] = 1;
  std::vector<int> deg(n, 0);
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> pq;
  for (int v : a) {
    for (int w : g.neighbors(v))
      if (active[w]) ++deg[v];
    pq.emplace(deg[v], v);
  }
  std::vector<int> result;
  size_t remaining = a.size();
  while (remaining > 0) {
    int v;
    for (;;) {
      auto [d, u] = pq.top();
      if (active[u] && d == deg[u]) {
        v = u;
        pq.pop();
        break;
      }
      pq.pop();
    }
    result.push_back(v);
    // remove v and its active neighbors
    std::vector<int> gone{v};
    for (int w : g.neighbors(v))
      if (active[w]) gone.push_back(w);
    for (int w : gone) {
      active[w] = 0;
      --remaining;
    }
    for (int w : gone)
      for (int x : g.neighbors(w))
        if (active[x]) {
          --deg[x];
          pq.emplace(deg[x], x);
        }
  }
  std::sort(result.begin(), result.end());
  return result;
}

UqwResult uqw_ld(const Graph& g, const std::vector<int>& a, int r, int k_max,
                 const Deadline& deadline) {
  if (r < 1) throw std::invalid_argument("uqw_ld: r must be >= 1");
  if (k_max < 0) throw std::invalid_argument("uqw_ld: K must be >= 0");
  int n = g.vertex_count();
  std::vector<int> by_degree(n);
  for (int v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&g](int x, int y) {
    if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
    return x < y;
  });

  UqwResult best;
  best.radius = r;
  int best_score = -1;
  std::vector<char> in_s(n, 0);
  std::vector<int> sorted_a(a);
  std::sort(sorted_a.begin(), sorted_a.end());
  best.source = sorted_a;

  for (int k = 0; k <= std::min(k_max, n); ++k) {
    deadline.check();
    std::vector<int> s(by_degree.begin(), by_degree.begin() + k);
    std::fill(in_s.begin(), in_s.end(), 0);
    for (int v : s) in_s[v] = 1;

    // (G - S)^r restricted to A \ S, built from bounded BFS per member
    std::vector<int> members;
    for (int v : sorted_a)
      if (!in_s[v]) members.push_back(v);
    std::vector<std::pair<int, int>> edges;
    for (int v : members) {
      auto dist = capped_distances(g, v, r, in_s);
      for (int u : members)
        if (u > v && dist[u] != -1) edges.emplace_back(v, u);
    }
    Graph power = Graph::from_edges(n, edges);
    std::vector<int> b = greedy_independent_set(power, members);

    std::sort(s.begin(), s.end());
    int sc = profile_score(g, s, b, r);
    if (sc > best_score) {
      best_score = sc;
      best.deleted = std::move(s);
      best.independent = std::move(b);
    }
  }
  return best;
}

void write_uqw_result(const Graph& g, const UqwResult& res, std::ostream& out) {
  out << "S:";
  for (int v : res.deleted) out << ' ' << g.label(v);
  out << "\nB:";
  for (int v : res.independent) out << ' ' << g.label(v);
  out << '\n';
}

UqwResult read_uqw_result(const Graph& g, std::istream& in, int radius) {
  UqwResult res;
  res.radius = radius;
  std::string line;
  auto parse_line = [&](const std::string& prefix, std::vector<int>& out_vec) {
    if (!std::getline(in, line) || line.rfind(prefix, 0) != 0)
      throw std::invalid_argument("uqw result: expected line starting with '" + prefix + "'");
    std::istringstream ls(line.substr(prefix.size()));
    std::int64_t label;
    while (ls >> label) {
      auto id = g.id_of(label);
      if (!id) throw std::invalid_argument("uqw result: unknown label " + std::to_string(label));
      out_vec.push_back(*id);
    }
    std::sort(out_vec.begin(), out_vec.end());
  };
  parse_line("S:", res.deleted);
  parse_line("B:", res.independent);
  for (int v = 0; v < g.vertex_count(); ++v) res.source.push_back(v);
  return res;
}

}  // namespace colnum
