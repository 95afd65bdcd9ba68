#include "colnum/lower_bound.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <queue>

#include "colnum/reach.hpp"

namespace colnum {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<int> LbInstance::ancestors(int v) const {
  std::vector<int> out;
  for (int u = parent[v]; u != -1; u = parent[u]) out.push_back(u);
  return out;
}

namespace {

// Depth (in edges) of the full, untruncated tree of the (k, r) instance.
long long full_depth(int k, int r) {
  if (k == 1) return r + 1;
  if (r == 1) return k + 1;
  return full_depth(k, r - 1) + 1 + full_depth(k - 1, r);
}

struct LbBuilder {
  int d;
  int budget;  // max depth in edges; vertices deeper are not created
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<std::pair<int, int>> edges;
  long long safety_cap;

  int new_vertex(int par, int dep) {
    if ((long long)parent.size() >= safety_cap)
      throw std::invalid_argument("generate_lb: instance too large, use a truncation depth");
    int id = static_cast<int>(parent.size());
    parent.push_back(par);
    depth.push_back(dep);
    if (par != -1) edges.emplace_back(par, id);
    return id;
  }

  // Complete d-ary tree of the given edge-depth below a fresh root at
  // root_depth; returns (root, leaves at full depth) with created vertices.
  std::pair<int, std::vector<int>> build_tree(int tree_depth, int par, int root_depth) {
    int root = new_vertex(par, root_depth);
    std::vector<int> frontier{root};
    for (int level = 1; level <= tree_depth; ++level) {
      if (root_depth + level > budget) return {root, {}};
      std::vector<int> next;
      for (int v : frontier)
        for (int i = 0; i < d; ++i) next.push_back(new_vertex(v, root_depth + level));
      frontier = std::move(next);
    }
    return {root, frontier};
  }

  // Builds the (k, r) instance rooted below par; returns (root id, tree
  // leaves at the instance's full depth, vertices of the instance).
  struct Piece {
    int root;
    std::vector<int> full_leaves;
    int first_vertex, last_vertex;  // contiguous id range
  };

  Piece build(int k, int r, int par, int root_depth) {
    int first = static_cast<int>(parent.size());
    if (k == 1) {
      auto [root, leaves] = build_tree(r + 1, par, root_depth);
      return {root, std::move(leaves), first, static_cast<int>(parent.size()) - 1};
    }
    if (r == 1) {
      auto [root, leaves] = build_tree(k + 1, par, root_depth);
      // ancestor-descendant closure within this tree
      for (int v = first; v < static_cast<int>(parent.size()); ++v)
        for (int u = parent[v]; u != -1 && u >= first; u = parent[u])
          if (u != parent[v]) edges.emplace_back(u, v);
      return {root, std::move(leaves), first, static_cast<int>(parent.size()) - 1};
    }
    Piece inner = build(k, r - 1, par, root_depth);
    std::vector<int> all_leaves;
    for (int leaf : inner.full_leaves) {
      for (int copy = 0; copy < d; ++copy) {
        if (depth[leaf] + 1 > budget) continue;
        Piece sub = build(k - 1, r, leaf, depth[leaf] + 1);
        // the whole copy is fully adjacent to the leaf; the tree edge
        // leaf -> sub.root already exists
        for (int v = sub.first_vertex; v <= sub.last_vertex; ++v)
          if (v != sub.root) edges.emplace_back(leaf, v);
        all_leaves.insert(all_leaves.end(), sub.full_leaves.begin(), sub.full_leaves.end());
      }
    }
    return {inner.root, std::move(all_leaves), first, static_cast<int>(parent.size()) - 1};
  }
};

}  // namespace

LbInstance generate_lb(int k, int r, int mprime, int truncate_depth) {
  if (k < 1 || r < 1) throw std::invalid_argument("generate_lb: k and r must be >= 1");
  long long c = binomial(k + r, r);
  if (mprime <= c)
    throw std::invalid_argument("generate_lb: mprime must exceed binomial(k+r, r) = " +
                                std::to_string(c));
  LbInstance inst;
  inst.k = k;
  inst.r = r;
  inst.mprime = mprime;
  inst.c = static_cast<int>(c);
  inst.d = mprime - 1;

  long long full = full_depth(k, r);
  LbBuilder builder;
  builder.d = inst.d;
  builder.budget = truncate_depth >= 0 ? std::min<long long>(truncate_depth, full) : full;
  builder.safety_cap = 4'000'000;
  builder.build(k, r, -1, 0);

  inst.parent = std::move(builder.parent);
  inst.graph = Graph::from_edges(static_cast<int>(inst.parent.size()), builder.edges);
  inst.depth = *std::max_element(builder.depth.begin(), builder.depth.end());
  inst.truncated = builder.budget < full;
  return inst;
}

namespace {

// Largest independent set of the conflict graph given as adjacency masks
// over members 0..m-1; simple branch and bound, independence numbers here
// are tiny.
int max_independent(const std::vector<std::vector<char>>& conflict) {
  int m = static_cast<int>(conflict.size());
  int best = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next, int count) -> void {
    best = std::max(best, count);
    if (count + (m - next) <= best) return;
    for (int v = next; v < m; ++v) {
      bool ok = true;
      for (int u : chosen)
        if (conflict[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(v);
      self(self, v + 1, count + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

LbReport check_lb_properties(const LbInstance& inst, int exhaustive_limit) {
  LbReport rep;
  const Graph& g = inst.graph;
  int n = g.vertex_count();

  // (closure) every edge joins an ancestor-descendant pair
  rep.closure_ok = true;
  std::vector<int> depth(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = inst.parent[v]; u != -1; u = inst.parent[u]) ++depth[v];
  for (int v = 0; v < n && rep.closure_ok; ++v) {
    for (int w : g.neighbors(v)) {
      if (w < v) continue;
      int a = depth[v] < depth[w] ? v : w;
      int b = a == v ? w : v;
      bool related = false;
      for (int u = b; u != -1; u = inst.parent[u])
        if (u == a) {
          related = true;
          break;
        }
      if (!related) rep.closure_ok = false;
    }
  }

  // (shape) recorded depth matches, branching is 0 or d children everywhere
  std::vector<int> child_count(n, 0);
  int max_depth = 0;
  for (int v = 0; v < n; ++v) {
    if (inst.parent[v] != -1) ++child_count[inst.parent[v]];
    max_depth = std::max(max_depth, depth[v]);
  }
  rep.shape_ok = max_depth == inst.depth;
  for (int v = 0; v < n; ++v)
    if (child_count[v] != 0 && child_count[v] != inst.d) rep.shape_ok = false;
  if (!inst.truncated) {
    // base cases hit depth c exactly; nested instances may run deeper
    if (inst.k == 1 || inst.r == 1)
      rep.shape_ok = rep.shape_ok && inst.depth == inst.c;
    else
      rep.shape_ok = rep.shape_ok && inst.depth >= inst.c;
  }

  // (size) |V| >= d^c, full instances only
  if (!inst.truncated) {
    rep.size_checked = true;
    long double bound = std::pow(static_cast<long double>(inst.d), inst.c);
    rep.size_ok = static_cast<long double>(n) >= bound;
  }

  // (path reachability) each ancestor within r along the tree path
  rep.path_reach_ok = true;
  for (int v = 0; v < n && rep.path_reach_ok; ++v) {
    std::vector<int> path{v};
    for (int u = inst.parent[v]; u != -1; u = inst.parent[u]) path.push_back(u);
    std::vector<char> allowed(n, 0);
    for (int u : path) allowed[u] = 1;
    // BFS from v inside the path
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (!allowed[w] || dist[w] != -1) continue;
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
    for (int u : path)
      if (dist[u] == -1 || dist[u] > inst.r) rep.path_reach_ok = false;
  }

  // (diameter) every subtree induces a subgraph of diameter <= 2r
  rep.subtree_diameter_ok = true;
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (inst.parent[v] != -1) children[inst.parent[v]].push_back(v);
  for (int t = 0; t < n && rep.subtree_diameter_ok; ++t) {
    std::vector<int> sub;
    std::vector<int> stack{t};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      sub.push_back(u);
      for (int w : children[u]) stack.push_back(w);
    }
    std::vector<char> in_sub(n, 0);
    for (int u : sub) in_sub[u] = 1;
    for (int s : sub) {
      std::vector<int> dist(n, -1);
      std::queue<int> q;
      dist[s] = 0;
      q.push(s);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
          if (!in_sub[w] || dist[w] != -1) continue;
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
      for (int u : sub)
        if (dist[u] == -1 || dist[u] > 2 * inst.r) rep.subtree_diameter_ok = false;
    }
  }

  // (Z, B) brute force: all |Z| <= 2, maximum 2r-independent B in G - Z
  if (n <= exhaustive_limit) {
    rep.zb_checked = true;
    rep.zb_bound_ok = true;
    std::vector<std::vector<int>> zsets{{}};
    for (int z = 0; z < n; ++z) zsets.push_back({z});
    for (int z1 = 0; z1 < n; ++z1)
      for (int z2 = z1 + 1; z2 < n; ++z2) zsets.push_back({z1, z2});
    for (const auto& z : zsets) {
      std::vector<char> removed(n, 0);
      for (int v : z) removed[v] = 1;
      std::vector<int> members;
      for (int v = 0; v < n; ++v)
        if (!removed[v]) members.push_back(v);
      int m = static_cast<int>(members.size());
      std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
      for (int i = 0; i < m; ++i) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[members[i]] = 0;
        q.push(members[i]);
        while (!q.empty()) {
          int u = q.front();
          q.pop();
          if (dist[u] >= 2 * inst.r) continue;
          for (int w : g.neighbors(u)) {
            if (removed[w] || dist[w] != -1) continue;
            dist[w] = dist[u] + 1;
            q.push(w);
          }
        }
        for (int j = 0; j < m; ++j)
          if (j != i && dist[members[j]] != -1) conflict[i][j] = 1;
      }
      int best_b = max_independent(conflict);
      if (best_b > static_cast<int>(z.size()) * inst.mprime + 1) {
        rep.zb_bound_ok = false;
        break;
      }
    }
  }

  // (wcol) exact value equals c on tiny instances
  if (n <= 9 && n > 0) {
    rep.wcol_checked = true;
    rep.wcol_ok = exact_wcol(g, inst.r).first == inst.c;
  }

  return rep;
}

void write_lb_instance(const LbInstance& inst, std::ostream& edges, std::ostream& tree) {
  serialize_edge_list(inst.graph, edges);
  for (int v = 0; v < inst.graph.vertex_count(); ++v)
    tree << inst.graph.label(v) << ' '
         << (inst.parent[v] == -1 ? -1 : inst.graph.label(inst.parent[v])) << '\n';
}

}  // namespace colnum
