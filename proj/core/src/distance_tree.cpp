#include "colnum/distance_tree.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace colnum {

namespace {

// Vertices within the threshold of v in ctx - removed, as a membership mask.
void near_mask(const Graph& ctx, int v, int threshold, const std::vector<char>& removed,
               std::vector<char>& mask, std::vector<int>& touched) {
  std::queue<std::pair<int, int>> q;
  mask[v] = 1;
  touched.push_back(v);
  q.emplace(v, 0);
  while (!q.empty()) {
    auto [u, d] = q.front();
    q.pop();
    if (d >= threshold) continue;
    for (int w : ctx.neighbors(u)) {
      if (mask[w]) continue;
      if (!removed.empty() && removed[w]) continue;
      mask[w] = 1;
      touched.push_back(w);
      q.emplace(w, d + 1);
    }
  }
}

}  // namespace

DistanceTree build_distance_tree(const Graph& ctx, const std::vector<int>& elements, int threshold,
                                 const std::vector<char>& removed) {
  DistanceTree t;
  t.threshold = threshold;
  if (elements.empty()) return t;
  std::vector<char> mask(ctx.vertex_count(), 0);
  std::vector<int> touched;
  for (int a : elements) {
    if (t.nodes.empty()) {
      t.nodes.push_back({a, -1, -1, -1, 0});
      continue;
    }
    near_mask(ctx, a, threshold, removed, mask, touched);
    int at = 0;
    for (;;) {
      bool near = mask[t.nodes[at].vertex] != 0;
      int& child = near ? t.nodes[at].left : t.nodes[at].right;
      if (child == -1) {
        child = static_cast<int>(t.nodes.size());
        t.nodes.push_back({a, -1, -1, at, near ? 0 : 1});
        break;
      }
      at = child;
    }
    for (int x : touched) mask[x] = 0;
    touched.clear();
  }
  return t;
}

std::pair<std::vector<int>, BranchKind> longest_monotone_subpath(const DistanceTree& t) {
  if (t.empty()) throw std::invalid_argument("longest_monotone_subpath: empty tree");
  // Deepest leaf; preorder with left first makes the first hit the leftmost
  // address among the deepest.
  std::vector<int> depth(t.nodes.size(), 0);
  int best_leaf = 0;
  std::vector<int> stack{0};
  std::vector<int> preorder;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    preorder.push_back(u);
    const auto& nd = t.nodes[u];
    if (nd.parent != -1) depth[u] = depth[nd.parent] + 1;
    if (nd.right != -1) stack.push_back(nd.right);
    if (nd.left != -1) stack.push_back(nd.left);
  }
  for (int u : preorder)
    if (t.nodes[u].left == -1 && t.nodes[u].right == -1 && depth[u] > depth[best_leaf])
      best_leaf = u;

  std::vector<int> path;  // root..leaf
  for (int u = best_leaf; u != -1; u = t.nodes[u].parent) path.push_back(u);
  std::reverse(path.begin(), path.end());

  // longest constant-direction run of edges; ties towards the topmost
  int run_begin = 0, run_len = 1, best_begin = 0, best_len = 1;
  for (size_t i = 1; i < path.size(); ++i) {
    if (i > 1 && t.nodes[path[i]].bit == t.nodes[path[i - 1]].bit) {
      ++run_len;
    } else {
      run_begin = static_cast<int>(i) - 1;
      run_len = 2;
    }
    if (run_len > best_len) {
      best_len = run_len;
      best_begin = run_begin;
    }
  }
  std::vector<int> chain;
  for (int i = best_begin; i < best_begin + best_len; ++i) chain.push_back(t.nodes[path[i]].vertex);
  BranchKind kind = BranchKind::Left;
  if (best_len > 1)
    kind = t.nodes[path[best_begin + 1]].bit == 0 ? BranchKind::Left : BranchKind::Right;
  return {chain, kind};
}

namespace {

// Longest chain of same-direction child links anywhere in the tree, as node
// indices from top to bottom; ties towards the first in preorder.
std::vector<int> longest_run(const DistanceTree& t, int bit) {
  if (t.empty()) return {};
  std::vector<int> up(t.nodes.size(), 1);  // chain length ending at node
  int best = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    const auto& nd = t.nodes[u];
    if (nd.parent != -1 && nd.bit == bit) up[u] = up[nd.parent] + 1;
    if (up[u] > up[best]) best = u;
    if (nd.right != -1) stack.push_back(nd.right);
    if (nd.left != -1) stack.push_back(nd.left);
  }
  std::vector<int> chain;
  for (int u = best, len = up[best]; len > 0; --len, u = t.nodes[u].parent) chain.push_back(u);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// Quotient of g - deleted_orig: every center absorbs its radius-rho Voronoi
// cell (nearest center, ties by smaller center id); other vertices stay as
// singletons. Quotient vertex ids are graph ids of their representatives.
struct Quotient {
  Graph graph;                       // on representative ids, compacted
  std::vector<int> rep_of;           // original vertex -> representative original id (-1 deleted)
  std::vector<int> qid_of;           // representative original id -> quotient id (-1 none)
  std::vector<int> orig_of;          // quotient id -> representative original id
  std::vector<std::vector<int>> members;  // quotient id -> original vertices of the blob
};

Quotient build_quotient(const Graph& g, const std::vector<char>& deleted,
                        const std::vector<int>& centers, int rho) {
  int n = g.vertex_count();
  Quotient qt;
  qt.rep_of.assign(n, -1);
  // layered multi-source BFS; each layer resolves ownership ties by center id
  std::vector<int> owner(n, -1);
  std::vector<int> frontier;
  for (int c : centers) {
    owner[c] = c;
    frontier.push_back(c);
  }
  for (int d = 0; d < rho; ++d) {
    std::vector<std::pair<int, int>> claims;  // (vertex, owner)
    for (int u : frontier)
      for (int w : g.neighbors(u))
        if (!deleted[w] && owner[w] == -1) claims.emplace_back(w, owner[u]);
    std::sort(claims.begin(), claims.end());
    std::vector<int> next;
    for (auto [w, c] : claims) {
      if (owner[w] != -1) continue;  // first claim per vertex = smallest owner id
      owner[w] = c;
      next.push_back(w);
    }
    frontier = std::move(next);
  }
  for (int v = 0; v < n; ++v) {
    if (deleted[v]) continue;
    qt.rep_of[v] = owner[v] == -1 ? v : owner[v];
  }
  qt.qid_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int rep = qt.rep_of[v];
    if (rep == -1) continue;
    if (qt.qid_of[rep] == -1) {
      qt.qid_of[rep] = static_cast<int>(qt.orig_of.size());
      qt.orig_of.push_back(rep);
      qt.members.emplace_back();
    }
    qt.members[qt.qid_of[rep]].push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    if (qt.rep_of[v] == -1) continue;
    for (int w : g.neighbors(v)) {
      if (w < v || qt.rep_of[w] == -1) continue;
      int a = qt.qid_of[qt.rep_of[v]], b = qt.qid_of[qt.rep_of[w]];
      if (a != b) edges.emplace_back(a, b);
    }
  }
  qt.graph = Graph::from_edges(static_cast<int>(qt.orig_of.size()), edges);
  return qt;
}

struct Candidate {
  std::vector<int> centers;  // original vertex ids
  std::vector<int> deleted;  // original vertex ids, sorted
  int sc = -1;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.sc != b.sc) return a.sc > b.sc;
  if (a.centers.size() != b.centers.size()) return a.centers.size() > b.centers.size();
  return a.deleted.size() < b.deleted.size();
}

}  // namespace

UqwResult uqw_tree(const Graph& g, const std::vector<int>& a, int r, TreeVariant variant,
                   const Deadline& deadline) {
  if (r < 1) throw std::invalid_argument("uqw_tree: r must be >= 1");
  int n = g.vertex_count();
  UqwResult result;
  result.radius = r;
  result.source = a;
  std::sort(result.source.begin(), result.source.end());
  result.source.erase(std::unique(result.source.begin(), result.source.end()),
                      result.source.end());

  std::vector<int> centers = result.source;
  std::vector<int> s_list;  // accumulated deletions, original ids
  std::vector<char> s_mask(n, 0);

  for (int stage = 1; stage <= r && !centers.empty(); ++stage) {
    deadline.check();
    int rho = (stage - 1) / 2;
    Quotient qt = build_quotient(g, s_mask, centers, rho);
    std::vector<int> x;  // quotient ids of the current centers
    x.reserve(centers.size());
    for (int c : centers) x.push_back(qt.qid_of[c]);
    std::sort(x.begin(), x.end());

    if (stage % 2 == 1) {
      // odd step: greedy independent set in the quotient
      std::vector<int> chosen = greedy_independent_set(qt.graph, x);
      centers.clear();
      for (int q : chosen) centers.push_back(qt.orig_of[q]);
      std::sort(centers.begin(), centers.end());
      continue;
    }

    // even step: radius-2 engine on the quotient
    const std::vector<int> x0 = x;
    std::vector<char> deleted_q(qt.graph.vertex_count(), 0);
    std::vector<int> deleted_blobs;  // quotient ids
    auto snapshot_deleted = [&](size_t upto) {
      std::vector<int> s(s_list);
      for (size_t i = 0; i < upto; ++i)
        for (int v : qt.members[deleted_blobs[i]]) s.push_back(v);
      std::sort(s.begin(), s.end());
      return s;
    };
    std::vector<Candidate> pool;
    auto record = [&](const std::vector<int>& chain_qids) {
      Candidate cand;
      for (int q : chain_qids) cand.centers.push_back(qt.orig_of[q]);
      std::sort(cand.centers.begin(), cand.centers.end());
      cand.deleted = snapshot_deleted(deleted_blobs.size());
      cand.sc = profile_score(g, cand.deleted, cand.centers, r);
      pool.push_back(std::move(cand));
    };

    std::vector<int> working = x;
    for (;;) {
      deadline.check();
      std::vector<int> alive_working;
      const std::vector<int>& base = variant == TreeVariant::Tree1 ? x0 : working;
      for (int q : base)
        if (!deleted_q[q]) alive_working.push_back(q);
      if (alive_working.empty()) break;

      DistanceTree tree = build_distance_tree(qt.graph, alive_working, 2, deleted_q);

      if (variant == TreeVariant::LdIt) {
        // candidate: greedy IS of the squared quotient restricted to the set
        std::vector<std::pair<int, int>> edges2;
        std::vector<char> in_set(qt.graph.vertex_count(), 0);
        for (int q : alive_working) in_set[q] = 1;
        for (int q : alive_working)
          for (int u : ball(qt.graph, q, 2, deleted_q))
            if (u > q && in_set[u]) edges2.emplace_back(q, u);
        Graph sq = Graph::from_edges(qt.graph.vertex_count(), edges2);
        record(greedy_independent_set(sq, alive_working));
      } else {
        std::vector<int> far_nodes = longest_run(tree, 1);
        std::vector<int> far;
        for (int node : far_nodes) far.push_back(tree.nodes[node].vertex);
        record(far);
      }

      if ((int)alive_working.size() < 4) break;  // set became too small
      std::vector<int> near_nodes = longest_run(tree, 0);
      if (near_nodes.size() < 2) break;
      std::vector<char> near_mask_q(qt.graph.vertex_count(), 0);
      std::vector<int> near;
      for (int node : near_nodes) {
        near.push_back(tree.nodes[node].vertex);
        near_mask_q[tree.nodes[node].vertex] = 1;
      }
      // delete the vertex seeing most of the near chain
      int best_w = -1, best_hits = 0;
      for (int q = 0; q < qt.graph.vertex_count(); ++q) {
        if (deleted_q[q]) continue;
        int hits = 0;
        for (int u : qt.graph.neighbors(q))
          if (near_mask_q[u] && !deleted_q[u]) ++hits;
        if (hits > best_hits) {
          best_hits = hits;
          best_w = q;
        }
      }
      if (best_w == -1 || best_hits < 2) break;
      deleted_q[best_w] = 1;
      deleted_blobs.push_back(best_w);
      working.clear();
      for (int u : qt.graph.neighbors(best_w))
        if (near_mask_q[u] && !deleted_q[u]) working.push_back(u);
      std::sort(working.begin(), working.end());
    }

    assert(!pool.empty());
    size_t win = 0;
    for (size_t i = 1; i < pool.size(); ++i)
      if (better(pool[i], pool[win])) win = i;
    centers = pool[win].centers;
    s_list = pool[win].deleted;
    std::fill(s_mask.begin(), s_mask.end(), 0);
    for (int v : s_list) s_mask[v] = 1;
  }

  result.deleted = s_list;
  result.independent = centers;
  std::sort(result.independent.begin(), result.independent.end());
  return result;
}

}  // namespace colnum
