#include "colnum/simple_orders.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace colnum {

namespace {

std::vector<int> degree_desc_sequence(const Graph& g) {
  std::vector<int> seq(g.vertex_count());
  std::iota(seq.begin(), seq.end(), 0);
  std::stable_sort(seq.begin(), seq.end(), [&g](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return seq;
}

}  // namespace

Order order_simple(const Graph& g, const SimpleVariant& variant, const Deadline& deadline) {
  switch (variant.kind) {
    case SimpleVariant::DegreeDesc:
      return Order(degree_desc_sequence(g));
    case SimpleVariant::Degeneracy:
      return degeneracy_order(g).first;
    case SimpleVariant::Random: {
      std::vector<int> seq(g.vertex_count());
      std::iota(seq.begin(), seq.end(), 0);
      Rng rng(variant.seed);
      rng.shuffle(seq);
      return Order(std::move(seq));
    }
    case SimpleVariant::PowerDegreeDesc: {
      if (variant.radius < 1) throw std::invalid_argument("Power* variants need radius >= 1");
      deadline.check();
      Graph p = power_graph(g, variant.radius);
      deadline.check();
      return Order(degree_desc_sequence(p));
    }
    case SimpleVariant::PowerDegeneracy: {
      if (variant.radius < 1) throw std::invalid_argument("Power* variants need radius >= 1");
      deadline.check();
      Graph p = power_graph(g, variant.radius);
      deadline.check();
      return degeneracy_order(p).first;
    }
  }
  throw std::logic_error("unreachable");
}

Order order_min_degree_elimination(const Graph& g, int* max_back_degree,
                                   const Deadline& deadline) {
  int n = g.vertex_count();
  std::vector<std::unordered_set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<int> deg(n);
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> pq;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    pq.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  std::vector<int> at(n);
  int worst = 0;
  for (int step = 0; step < n; ++step) {
    if ((step & 63) == 0) deadline.check();
    int v;
    for (;;) {
      auto [dd, u] = pq.top();
      if (!removed[u] && dd == deg[u]) {
        v = u;
        pq.pop();
        break;
      }
      pq.pop();
    }
    worst = std::max(worst, deg[v]);
    removed[v] = 1;
    at[n - 1 - step] = v;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    // fill: neighbors of v become a clique
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int a = nb[i], b = nb[j];
        if (adj[a].insert(b).second) {
          adj[b].insert(a);
          ++deg[a];
          ++deg[b];
          pq.emplace(deg[a], a);
          pq.emplace(deg[b], b);
        }
      }
    }
    for (int w : nb) {
      adj[w].erase(v);
      --deg[w];
      pq.emplace(deg[w], w);
    }
    adj[v].clear();
  }
  if (max_back_degree) *max_back_degree = worst;
  return Order(std::move(at));
}

namespace {

// Recursive separator decomposition over induced subgraphs, identified by
// alive masks to avoid rebuilding graphs.
class TreedepthDecomposer {
 public:
  TreedepthDecomposer(const Graph& g, const Deadline& deadline) : g_(g), deadline_(deadline) {}

  Order run(int* forest_height) {
    std::vector<char> alive(g_.vertex_count(), 1);
    int height = 0;
    for (const auto& comp : components(g_, alive))
      height = std::max(height, decompose(comp));
    if (forest_height) *forest_height = height;
    return Order(std::move(sequence_));
  }

 private:
  const Graph& g_;
  const Deadline& deadline_;
  std::vector<int> sequence_;

  int degree_in(int v, const std::vector<char>& mask) const {
    int d = 0;
    for (int w : g_.neighbors(v))
      if (mask[w]) ++d;
    return d;
  }

  std::vector<int> sorted_by_degree_desc(std::vector<int> vs, const std::vector<char>& mask) const {
    std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
      int da = degree_in(a, mask), db = degree_in(b, mask);
      if (da != db) return da > db;
      return a < b;
    });
    return vs;
  }

  bool is_clique(const std::vector<int>& comp, const std::vector<char>& mask) const {
    int want = static_cast<int>(comp.size()) - 1;
    for (int v : comp)
      if (degree_in(v, mask) != want) return false;
    return true;
  }

  // Neighborhood of a vertex set within mask, excluding the set itself.
  std::vector<int> set_neighborhood(const std::vector<int>& vs, const std::vector<char>& mask,
                                    const std::vector<char>& in_set) const {
    std::vector<int> nb;
    for (int v : vs)
      for (int w : g_.neighbors(v))
        if (mask[w] && !in_set[w]) nb.push_back(w);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    return nb;
  }

  // Size of the largest component of G[mask - sep].
  int largest_component_after(const std::vector<int>& comp, const std::vector<char>& mask,
                              const std::vector<int>& sep) const {
    std::vector<char> rest(mask);
    for (int v : sep) rest[v] = 0;
    std::vector<char> scope(g_.vertex_count(), 0);
    for (int v : comp) scope[v] = rest[v];
    int largest = 0;
    for (const auto& c : components(g_, scope)) largest = std::max(largest, (int)c.size());
    return largest;
  }

  // Minimal separators N(C) over components C of G[mask - removed].
  std::vector<std::vector<int>> separators_from(const std::vector<char>& mask,
                                                const std::vector<char>& removed) const {
    std::vector<char> scope(g_.vertex_count(), 0);
    for (int v = 0; v < g_.vertex_count(); ++v) scope[v] = mask[v] && !removed[v];
    std::vector<std::vector<int>> out;
    std::vector<char> in_set(g_.vertex_count(), 0);
    for (const auto& c : components(g_, scope)) {
      for (int v : c) in_set[v] = 1;
      auto nb = set_neighborhood(c, mask, in_set);
      for (int v : c) in_set[v] = 0;
      if (!nb.empty()) out.push_back(std::move(nb));
    }
    return out;
  }

  // Returns the elimination-forest height of the processed component.
  int decompose(const std::vector<int>& comp) {
    deadline_.check();
    std::vector<char> mask(g_.vertex_count(), 0);
    for (int v : comp) mask[v] = 1;

    if (comp.size() <= 2 || is_clique(comp, mask)) {
      for (int v : sorted_by_degree_desc(comp, mask)) sequence_.push_back(v);
      return static_cast<int>(comp.size());
    }

    // Initial close separator: remove N[x] for x of maximum degree and take
    // the neighborhood of a smallest remaining component; fall back to the
    // next vertex when N[x] covers everything.
    std::vector<int> sep;
    for (int x : sorted_by_degree_desc(comp, mask)) {
      std::vector<char> removed(g_.vertex_count(), 0);
      removed[x] = 1;
      for (int w : g_.neighbors(x))
        if (mask[w]) removed[w] = 1;
      auto seps = separators_from(mask, removed);
      if (seps.empty()) continue;
      // smallest component was wanted; separators_from lists components in
      // min-id order, so re-derive the sizes to pick the smallest.
      std::vector<char> scope(g_.vertex_count(), 0);
      for (int v = 0; v < g_.vertex_count(); ++v) scope[v] = mask[v] && !removed[v];
      auto comps = components(g_, scope);
      size_t best = 0;
      for (size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() < comps[best].size()) best = i;
      std::vector<char> in_set(g_.vertex_count(), 0);
      for (int v : comps[best]) in_set[v] = 1;
      sep = set_neighborhood(comps[best], mask, in_set);
      if (!sep.empty()) break;
    }
    if (sep.empty()) {
      for (int v : sorted_by_degree_desc(comp, mask)) sequence_.push_back(v);
      return static_cast<int>(comp.size());
    }

    // Refinement: among the component neighborhoods obtained by removing a
    // separator member's closed neighborhood, move to the candidate that
    // strictly shrinks the largest remaining component.
    int cur_metric = largest_component_after(comp, mask, sep);
    for (;;) {
      deadline_.check();
      std::vector<int> best_sep;
      int best_metric = cur_metric;
      for (int x : sep) {
        std::vector<char> removed(g_.vertex_count(), 0);
        for (int v : sep) removed[v] = 1;
        removed[x] = 1;
        for (int w : g_.neighbors(x))
          if (mask[w]) removed[w] = 1;
        for (auto& cand : separators_from(mask, removed)) {
          int metric = largest_component_after(comp, mask, cand);
          if (metric < best_metric ||
              (metric == best_metric && !best_sep.empty() &&
               (cand.size() < best_sep.size() ||
                (cand.size() == best_sep.size() && cand < best_sep)))) {
            best_metric = metric;
            best_sep = std::move(cand);
          }
        }
      }
      if (best_sep.empty() || best_metric >= cur_metric) break;
      sep = std::move(best_sep);
      cur_metric = best_metric;
    }

    for (int v : sorted_by_degree_desc(sep, mask)) sequence_.push_back(v);
    std::vector<char> scope(mask);
    for (int v : sep) scope[v] = 0;
    int sub_height = 0;
    for (const auto& c : components(g_, scope)) sub_height = std::max(sub_height, decompose(c));
    return static_cast<int>(sep.size()) + sub_height;
  }
};

}  // namespace

Order order_treedepth_heuristic(const Graph& g, int* forest_height, const Deadline& deadline) {
  return TreedepthDecomposer(g, deadline).run(forest_height);
}

}  // namespace colnum
