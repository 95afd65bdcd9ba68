#include "colnum/dtf.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <set>
#include <unordered_set>

namespace colnum {

bool DtfGraph::has_arc(int u, int v) const { return weight(u, v) != 0; }

int DtfGraph::weight(int u, int v) const {
  for (auto [t, w] : out_[u])
    if (t == v) return w;
  return 0;
}

int DtfGraph::max_out_degree() const {
  size_t d = 0;
  for (const auto& arcs : out_) d = std::max(d, arcs.size());
  return static_cast<int>(d);
}

Graph DtfGraph::underlying() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertex_count(); ++u)
    for (auto [v, w] : out_[u]) edges.emplace_back(u, v);
  return Graph::from_edges(vertex_count(), edges);
}

void DtfGraph::write_arcs(std::ostream& out) const {
  for (int u = 0; u < vertex_count(); ++u) {
    auto arcs = out_[u];
    std::sort(arcs.begin(), arcs.end());
    for (auto [v, w] : arcs) out << u << ' ' << v << ' ' << w << '\n';
  }
}

void DtfGraph::add_arc(int u, int v, int w) {
  assert(u != v && !has_arc(u, v));
  out_[u].emplace_back(v, w);
  in_[v].emplace_back(u, w);
  ++arcs_;
}

namespace {

// Orients each undirected edge towards its earlier endpoint under the
// degeneracy order of the pair graph, so out-degrees stay at the degeneracy.
void orient_batch(DtfGraph& dtf, const std::vector<std::pair<int, int>>& pairs, int weight) {
  if (pairs.empty()) return;
  Graph aux = Graph::from_edges(dtf.vertex_count(), pairs);
  Order order = degeneracy_order(aux).first;
  for (auto [a, b] : pairs) {
    int later = order.pos[a] > order.pos[b] ? a : b;
    int earlier = later == a ? b : a;
    dtf.add_arc(later, earlier, weight);
  }
}

}  // namespace

DtfGraph dtf_augment(const Graph& g, int r, const Deadline& deadline) {
  return dtf_augment(g, r, degeneracy_order(g).first, deadline);
}

DtfGraph dtf_augment(const Graph& g, int r, const Order& initial, const Deadline& deadline) {
  if (r < 1) throw std::invalid_argument("dtf_augment: r must be >= 1");
  int n = g.vertex_count();
  DtfGraph dtf(n);
  std::unordered_set<long long> arc_keys;
  auto key = [n](int u, int v) { return static_cast<long long>(u) * n + v; };
  auto has = [&](int u, int v) { return arc_keys.count(key(u, v)) != 0; };
  auto add = [&](int u, int v, int w) {
    dtf.add_arc(u, v, w);
    arc_keys.insert(key(u, v));
  };
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u))
      if (initial.pos[v] < initial.pos[u]) add(u, v, 1);

  // out/in arcs grouped by weight; index [w][v]
  std::vector<std::vector<std::vector<int>>> out_w(r + 1, std::vector<std::vector<int>>(n));
  std::vector<std::vector<std::vector<int>>> in_w(r + 1, std::vector<std::vector<int>>(n));
  for (int u = 0; u < n; ++u)
    for (auto [v, w] : dtf.out_arcs(u)) {
      out_w[1][u].push_back(v);
      in_w[1][v].push_back(u);
    }

  for (int i = 2; i <= r; ++i) {
    deadline.check();
    // transitive arcs w->u from w->v (weight b) and v->u (weight a), a+b = i
    std::set<std::pair<int, int>> transitive;
    for (int b = 1; b <= i - 1; ++b) {
      int a = i - b;
      for (int v = 0; v < n; ++v) {
        if (in_w[b][v].empty() || out_w[a][v].empty()) continue;
        for (int w : in_w[b][v]) {
          for (int u : out_w[a][v]) {
            if (w == u || has(w, u)) continue;
            transitive.emplace(w, u);
          }
        }
      }
      if ((b & 3) == 0) deadline.check();
    }

    // fraternal pairs {v, w} from a common tail with weights (i-1, 1)
    std::set<std::pair<int, int>> fraternal;
    auto consider_pair = [&](int v, int w) {
      if (v == w) return;
      int a = std::min(v, w), b = std::max(v, w);
      if (has(a, b) || has(b, a)) return;  // some arc already joins them
      if (transitive.count({a, b}) || transitive.count({b, a})) return;
      fraternal.emplace(a, b);
    };
    for (int u = 0; u < n; ++u) {
      if (i == 2) {
        const auto& nb = out_w[1][u];
        for (size_t x = 0; x < nb.size(); ++x)
          for (size_t y = x + 1; y < nb.size(); ++y) consider_pair(nb[x], nb[y]);
      } else {
        for (int v : out_w[i - 1][u])
          for (int w : out_w[1][u]) consider_pair(v, w);
      }
      if ((u & 255) == 0) deadline.check();
    }

    for (auto [w, u] : transitive) {
      add(w, u, i);
      out_w[i][w].push_back(u);
      in_w[i][u].push_back(w);
    }
    std::vector<std::pair<int, int>> pairs(fraternal.begin(), fraternal.end());
    orient_batch(dtf, pairs, i);
    // register the freshly oriented fraternal arcs in the weight index
    for (auto [a, b] : pairs) {
      if (dtf.weight(a, b) == i) {
        arc_keys.insert(key(a, b));
        out_w[i][a].push_back(b);
        in_w[i][b].push_back(a);
      } else {
        arc_keys.insert(key(b, a));
        out_w[i][b].push_back(a);
        in_w[i][a].push_back(b);
      }
    }
    dtf.bump_step();
  }
  return dtf;
}

Order order_from_dtf(const Graph& g, int r, const Deadline& deadline) {
  DtfGraph dtf = dtf_augment(g, r, deadline);
  return degeneracy_order(dtf.underlying()).first;
}

}  // namespace colnum
