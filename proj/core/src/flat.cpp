#include "colnum/flat.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

namespace colnum {

std::string FlatConfig::name() const {
  std::ostringstream s;
  s << "flat:" << static_cast<int>(root_choice) << ':';
  switch (inner_order) {
    case BFS: s << "bfs"; break;
    case DFS: s << "dfs"; break;
    case SortByDegreeDesc: s << "sort"; break;
  }
  s << ':' << (reversed ? 1 : 0);
  return s.str();
}

FlatConfig parse_flat_config(const std::string& spec) {
  std::istringstream in(spec);
  std::string head, root, inner, rev;
  if (!std::getline(in, head, ':') || head != "flat" || !std::getline(in, root, ':') ||
      !std::getline(in, inner, ':') || !std::getline(in, rev))
    throw std::invalid_argument("flat config: expected flat:<1|2|3>:<bfs|dfs|sort>:<0|1>");
  FlatConfig cfg;
  if (root == "1")
    cfg.root_choice = FlatConfig::MaxNeighborsInProcessed;
  else if (root == "2")
    cfg.root_choice = FlatConfig::MaxDegreeInC;
  else if (root == "3")
    cfg.root_choice = FlatConfig::MaxDegreeAdjacentToProcessed;
  else
    throw std::invalid_argument("flat config: root must be 1, 2 or 3");
  if (inner == "bfs")
    cfg.inner_order = FlatConfig::BFS;
  else if (inner == "dfs")
    cfg.inner_order = FlatConfig::DFS;
  else if (inner == "sort")
    cfg.inner_order = FlatConfig::SortByDegreeDesc;
  else
    throw std::invalid_argument("flat config: inner order must be bfs, dfs or sort");
  if (rev == "0")
    cfg.reversed = false;
  else if (rev == "1")
    cfg.reversed = true;
  else
    throw std::invalid_argument("flat config: reversed must be 0 or 1");
  return cfg;
}

namespace {

struct FlatBuilder {
  const Graph& g;
  const FlatConfig& cfg;
  const Deadline& deadline;
  int n;
  std::vector<int> piece_of;  // -1 while unprocessed

  FlatBuilder(const Graph& g_, const FlatConfig& cfg_, const Deadline& dl)
      : g(g_), cfg(cfg_), deadline(dl), n(g_.vertex_count()), piece_of(n, -1) {}

  int degree_in_component(int v, const std::vector<char>& in_comp) const {
    int d = 0;
    for (int w : g.neighbors(v))
      if (in_comp[w]) ++d;
    return d;
  }

  int processed_neighbor_count(int v) const {
    int d = 0;
    for (int w : g.neighbors(v))
      if (piece_of[w] >= 0) ++d;
    return d;
  }

  int choose_root(const std::vector<int>& comp, const std::vector<char>& in_comp) const {
    int best = -1, best_key = -1;
    auto consider = [&](int v, int key) {
      if (key > best_key || (key == best_key && v < best)) {
        best = v;
        best_key = key;
      }
    };
    switch (cfg.root_choice) {
      case FlatConfig::MaxNeighborsInProcessed:
        for (int v : comp) consider(v, processed_neighbor_count(v));
        if (best_key > 0) return best;
        break;  // nothing adjacent yet: fall back to max degree
      case FlatConfig::MaxDegreeAdjacentToProcessed:
        for (int v : comp)
          if (processed_neighbor_count(v) > 0) consider(v, degree_in_component(v, in_comp));
        if (best != -1) return best;
        break;  // fresh component: fall back to max degree
      case FlatConfig::MaxDegreeInC:
        break;
    }
    best = -1;
    best_key = -1;
    for (int v : comp) consider(v, degree_in_component(v, in_comp));
    return best;
  }

  FlatDecomposition run() {
    FlatDecomposition out;
    std::vector<char> in_comp(n, 0);
    std::vector<int> parent(n), depth(n);
    int remaining = n;
    while (remaining > 0) {
      deadline.check();
      // largest unprocessed component, ties by smallest contained id
      std::vector<char> alive(n, 0);
      for (int v = 0; v < n; ++v) alive[v] = piece_of[v] < 0;
      auto comps = components(g, alive);
      assert(!comps.empty());
      size_t pick = 0;
      for (size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[pick].size()) pick = i;
      const std::vector<int>& comp = comps[pick];
      for (int v : comp) in_comp[v] = 1;

      // processed pieces adjacent to this component
      std::vector<int> adjacent_pieces;
      for (int v : comp)
        for (int w : g.neighbors(v))
          if (piece_of[w] >= 0) adjacent_pieces.push_back(piece_of[w]);
      std::sort(adjacent_pieces.begin(), adjacent_pieces.end());
      adjacent_pieces.erase(std::unique(adjacent_pieces.begin(), adjacent_pieces.end()),
                            adjacent_pieces.end());

      int root = choose_root(comp, in_comp);

      // BFS tree of G[comp] rooted there, neighbors scanned in id order
      for (int v : comp) parent[v] = -2;
      parent[root] = -1;
      depth[root] = 0;
      std::vector<int> bfs_seq;
      std::queue<int> q;
      q.push(root);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        bfs_seq.push_back(u);
        for (int w : g.neighbors(u)) {
          if (!in_comp[w] || parent[w] != -2) continue;
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        }
      }

      // contact vertex per adjacent piece: smallest BFS depth, ties by id
      std::vector<int> contacts;
      for (int piece : adjacent_pieces) {
        int best = -1;
        for (int v : bfs_seq) {
          bool touches = false;
          for (int w : g.neighbors(v))
            if (piece_of[w] == piece) {
              touches = true;
              break;
            }
          if (!touches) continue;
          if (best == -1 || depth[v] < depth[best] || (depth[v] == depth[best] && v < best))
            best = v;
        }
        assert(best != -1);
        contacts.push_back(best);
      }

      // minimal subtree containing the root and all contacts: union of
      // root paths of the contacts
      std::vector<int> piece_vertices{root};
      std::vector<std::pair<int, int>> subtree;
      std::vector<char> in_piece(n, 0);
      in_piece[root] = 1;
      for (int c : contacts)
        for (int v = c; !in_piece[v]; v = parent[v]) {
          in_piece[v] = 1;
          piece_vertices.push_back(v);
          subtree.emplace_back(v, parent[v]);
        }
      std::sort(piece_vertices.begin(), piece_vertices.end());

      int piece_id = static_cast<int>(out.pieces.size());
      for (int v : piece_vertices) piece_of[v] = piece_id;
      remaining -= static_cast<int>(piece_vertices.size());
      out.pieces.push_back(std::move(piece_vertices));
      out.roots.push_back(root);
      std::sort(contacts.begin(), contacts.end());
      contacts.erase(std::unique(contacts.begin(), contacts.end()), contacts.end());
      out.contacts.push_back(std::move(contacts));
      out.tree_edges.push_back(std::move(subtree));

      for (int v : comp) in_comp[v] = 0;
    }
    return out;
  }
};

std::vector<int> inner_sequence(const Graph& g, const FlatConfig& cfg,
                                const std::vector<int>& piece, int root) {
  std::vector<char> in_piece(g.vertex_count(), 0);
  for (int v : piece) in_piece[v] = 1;
  std::vector<int> seq;
  switch (cfg.inner_order) {
    case FlatConfig::BFS: {
      std::vector<char> seen(g.vertex_count(), 0);
      std::queue<int> q;
      q.push(root);
      seen[root] = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        seq.push_back(u);
        for (int w : g.neighbors(u)) {
          if (!in_piece[w] || seen[w]) continue;
          seen[w] = 1;
          q.push(w);
        }
      }
      break;
    }
    case FlatConfig::DFS: {
      std::vector<char> seen(g.vertex_count(), 0);
      std::vector<int> stack{root};
      seen[root] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        seq.push_back(u);
        // push in reverse id order so smaller ids are visited first
        const auto& nb = g.neighbors(u);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
          if (!in_piece[*it] || seen[*it]) continue;
          seen[*it] = 1;
          stack.push_back(*it);
        }
      }
      break;
    }
    case FlatConfig::SortByDegreeDesc: {
      seq = piece;
      std::stable_sort(seq.begin(), seq.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
      });
      break;
    }
  }
  assert(seq.size() == piece.size());
  if (cfg.reversed) std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

FlatDecomposition flat_decompose(const Graph& g, const FlatConfig& cfg, std::uint64_t /*seed*/,
                                 const Deadline& deadline) {
  return FlatBuilder(g, cfg, deadline).run();
}

Order order_flat(const Graph& g, const FlatConfig& cfg, std::uint64_t seed,
                 const Deadline& deadline) {
  FlatDecomposition dec = flat_decompose(g, cfg, seed, deadline);
  std::vector<int> at;
  at.reserve(g.vertex_count());
  for (size_t i = 0; i < dec.pieces.size(); ++i)
    for (int v : inner_sequence(g, cfg, dec.pieces[i], dec.roots[i])) at.push_back(v);
  return Order(std::move(at));
}

}  // namespace colnum
