#include "colnum/uqw_wcol.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "colnum/reach.hpp"

namespace colnum {

namespace {

// Active vertices within distance r of v in g - removed, v included.
std::vector<int> reached_members(const Graph& g, int v, int r, const std::vector<char>& removed,
                                 const std::vector<char>& member) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> hits;
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  if (member[v]) hits.push_back(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] >= r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1 || removed[w]) continue;
      dist[w] = dist[u] + 1;
      if (member[w]) hits.push_back(w);
      q.push(w);
    }
  }
  return hits;
}

}  // namespace

UqwResult uqw_mfcs(const Graph& g, const std::vector<int>& a, int r, const Order& order,
                   const Deadline& deadline) {
  if (r < 1) throw std::invalid_argument("uqw_mfcs: r must be >= 1");
  int n = g.vertex_count();
  ReachProfile wreach = wreach_sets(g, order, r);

  // conflict graph H: u ~ v iff one is weakly reachable from the other
  std::vector<std::pair<int, int>> conflict_edges;
  for (int v = 0; v < n; ++v)
    for (int u : wreach.sets[v])
      if (u != v) conflict_edges.emplace_back(u, v);
  Graph conflict = Graph::from_edges(n, conflict_edges);

  std::vector<int> sorted_a(a);
  std::sort(sorted_a.begin(), sorted_a.end());
  sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
  std::vector<int> iset = greedy_independent_set(conflict, sorted_a);

  // process in decreasing L order
  std::sort(iset.begin(), iset.end(),
            [&order](int u, int v) { return order.pos[u] > order.pos[v]; });

  UqwResult res;
  res.radius = r;
  res.source = sorted_a;
  std::vector<char> removed(n, 0), member(n, 0);
  std::vector<int> remaining = iset;
  while (!remaining.empty()) {
    deadline.check();
    int v = remaining.front();
    remaining.erase(remaining.begin());
    for (int u : remaining) member[u] = 1;
    std::vector<int> reached = reached_members(g, v, r, removed, member);
    for (int u : remaining) member[u] = 0;

    res.independent.push_back(v);
    if (2 * static_cast<int>(reached.size()) > static_cast<int>(remaining.size())) {
      // delete WReach_r(v) \ {v} and continue with the reached part
      for (int u : wreach.sets[v])
        if (u != v && !removed[u]) {
          removed[u] = 1;
          res.deleted.push_back(u);
        }
      std::sort(reached.begin(), reached.end(),
                [&order](int x, int y) { return order.pos[x] > order.pos[y]; });
      remaining = std::move(reached);
    } else {
      std::vector<char> hit(n, 0);
      for (int u : reached) hit[u] = 1;
      std::vector<int> rest;
      for (int u : remaining)
        if (!hit[u]) rest.push_back(u);
      remaining = std::move(rest);
    }
  }
  std::sort(res.deleted.begin(), res.deleted.end());
  std::sort(res.independent.begin(), res.independent.end());
  return res;
}

UqwResult uqw_tgv(const Graph& g, const std::vector<int>& a, int r, const Order& order,
                  TgvVariant variant, int k_thresholds, TgvDiagnostics* diag,
                  const Deadline& deadline) {
  if (r < 1) throw std::invalid_argument("uqw_tgv: r must be >= 1");
  if (k_thresholds < 1) throw std::invalid_argument("uqw_tgv: k_thresholds must be >= 1");
  int n = g.vertex_count();
  ReachProfile wreach = wreach_sets(g, order, r);
  int c = wreach.max_size;

  // who contains z in their weakly reachable set
  std::vector<std::vector<int>> containers(n);
  for (int v = 0; v < n; ++v)
    for (int u : wreach.sets[v]) containers[u].push_back(v);

  std::vector<int> sorted_a(a);
  std::sort(sorted_a.begin(), sorted_a.end());
  sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());

  TgvDiagnostics local_diag;
  local_diag.wreach_bound = c;

  struct Step {
    bool growth;
    int vertex;  // grown vertex or deleted z
  };

  UqwResult best;
  best.radius = r;
  best.source = sorted_a;
  int best_score = -1;
  auto consider = [&](std::vector<int> s, std::vector<int> b) {
    std::sort(s.begin(), s.end());
    std::sort(b.begin(), b.end());
    int sc = profile_score(g, s, b, r);
    if (sc > best_score ||
        (sc == best_score && (b.size() > best.independent.size() ||
                              (b.size() == best.independent.size() && s.size() < best.deleted.size())))) {
      best_score = sc;
      best.deleted = std::move(s);
      best.independent = std::move(b);
    }
  };

  // mark[v]: scratch flag for WReach intersection tests (New1)
  std::vector<int> mark(n, -1);

  for (int j = 1; j <= k_thresholds; ++j) {
    deadline.check();
    // active set kept sorted by position in L, least first
    std::vector<int> active = sorted_a;
    std::sort(active.begin(), active.end(),
              [&order](int x, int y) { return order.pos[x] < order.pos[y]; });
    std::vector<char> in_active(n, 0);
    for (int v : active) in_active[v] = 1;
    std::vector<char> removed(n, 0), in_b(n, 0);
    std::vector<int> s_run, b_run;
    std::vector<Step> log;

    while (!active.empty()) {
      deadline.check();
      int v = active.front();  // L-least active vertex
      // conflicting active vertices, v included. The intersection test skips
      // deleted vertices: a z kept in S no longer certifies a connection, and
      // a surviving z on a short G-S path stays in both sets.
      std::vector<int> conflicts;
      if (variant == TgvVariant::New1) {
        for (int u : wreach.sets[v])
          if (!removed[u]) mark[u] = v;
        for (int u : active) {
          bool inter = false;
          for (int w : wreach.sets[u])
            if (!removed[w] && mark[w] == v) {
              inter = true;
              break;
            }
          if (inter) conflicts.push_back(u);
        }
      } else {
        conflicts = reached_members(g, v, r, removed, in_active);
      }

      // growth when the fraction of OTHER conflicting vertices is at most
      // j/(k+1); v conflicts with itself under both notions
      if (static_cast<long long>(conflicts.size() - 1) * (k_thresholds + 1) <=
          static_cast<long long>(active.size()) * j) {
        b_run.push_back(v);
        in_b[v] = 1;
        log.push_back({true, v});
        std::vector<char> drop(n, 0);
        for (int u : conflicts) drop[u] = 1;
        drop[v] = 1;
        std::vector<int> next;
        for (int u : active)
          if (!drop[u]) next.push_back(u);
        for (int u : active) in_active[u] = 0;
        for (int u : next) in_active[u] = 1;
        active = std::move(next);
      } else {
        // deletion: z in most weakly reachable sets of active vertices
        int best_z = -1, best_count = -1;
        std::vector<int> count(n, 0);
        for (int u : active)
          for (int w : wreach.sets[u])
            if (!removed[w]) ++count[w];
        for (int z = 0; z < n; ++z) {
          if (removed[z] || in_b[z]) continue;  // the solution set is never deleted
          if (count[z] > best_count) {
            best_count = count[z];
            best_z = z;
          }
        }
        assert(best_z != -1);
        // per-step lower bound from the claim: |A'| >= t|A|/c - 1
        long long lhs = static_cast<long long>(best_count) * c * (k_thresholds + 1);
        long long rhs = static_cast<long long>(active.size()) * j;
        if (lhs < rhs) local_diag.step_bound_ok = false;

        removed[best_z] = 1;
        s_run.push_back(best_z);
        log.push_back({false, best_z});
        std::vector<char> keep(n, 0);
        for (int u : containers[best_z]) keep[u] = 1;
        std::vector<int> next;
        for (int u : active)
          if (keep[u] && u != best_z) next.push_back(u);
        for (int u : active) in_active[u] = 0;
        for (int u : next) in_active[u] = 1;
        active = std::move(next);
      }

      if (variant == TgvVariant::NewLd) {
        // complete the partial solution greedily: active-set-independent fill
        std::vector<int> fill_base;
        std::vector<char> far(n, 1);
        for (int b : b_run) {
          for (int u : reached_members(g, b, r, removed, std::vector<char>(n, 1))) far[u] = 0;
          far[b] = 0;
        }
        for (int u : sorted_a)
          if (!removed[u] && far[u]) fill_base.push_back(u);
        // greedy IS of (G - S)^r restricted to the far candidates
        std::vector<char> in_base(n, 0);
        for (int u : fill_base) in_base[u] = 1;
        std::vector<std::pair<int, int>> edges;
        for (int u : fill_base)
          for (int w : reached_members(g, u, r, removed, in_base))
            if (w > u) edges.emplace_back(u, w);
        Graph power = Graph::from_edges(n, edges);
        std::vector<int> filled = greedy_independent_set(power, fill_base);
        std::vector<int> b_all = b_run;
        b_all.insert(b_all.end(), filled.begin(), filled.end());
        consider(s_run, b_all);
      }
    }

    local_diag.max_deletions_pre_rollback =
        std::max(local_diag.max_deletions_pre_rollback, static_cast<int>(s_run.size()));

    // roll back the trailing deletion-only suffix
    size_t last_growth = log.size();
    for (size_t i = log.size(); i-- > 0;)
      if (log[i].growth) {
        last_growth = i;
        break;
      }
    std::vector<int> s_rolled;
    for (size_t i = 0; i < log.size(); ++i)
      if (!log[i].growth && (last_growth != log.size() && i < last_growth)) s_rolled.push_back(log[i].vertex);
    consider(s_rolled, b_run);
  }

  if (diag) *diag = local_diag;
  if (best_score < 0) {
    // empty A: nothing to do
    best.deleted.clear();
    best.independent.clear();
  }
  return best;
}

}  // namespace colnum
