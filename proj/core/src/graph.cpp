#include "colnum/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace colnum {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::int64_t> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = v;
  std::vector<std::pair<std::int64_t, std::int64_t>> labeled;
  labeled.reserve(edges.size());
  for (auto [u, v] : edges) labeled.emplace_back(u, v);
  return from_labeled_edges(labeled, labels);
}

Graph Graph::from_labeled_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                                const std::vector<std::int64_t>& extra_labels) {
  std::vector<std::int64_t> labels(extra_labels);
  for (auto [u, v] : edges) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.adj_.assign(g.labels_.size(), {});
  auto id = [&g](std::int64_t label) {
    auto it = std::lower_bound(g.labels_.begin(), g.labels_.end(), label);
    return static_cast<int>(it - g.labels_.begin());
  };
  std::vector<std::pair<int, int>> norm;
  norm.reserve(edges.size());
  for (auto [a, b] : edges) {
    int u = id(a), v = id(b);
    if (u == v) continue;
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  for (auto [u, v] : norm) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.m_ = static_cast<int>(norm.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

std::optional<int> Graph::id_of(std::int64_t label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Order::Order(std::vector<int> sequence) : at(std::move(sequence)) {
  pos.assign(at.size(), -1);
  for (int p = 0; p < static_cast<int>(at.size()); ++p) {
    int v = at[p];
    if (v < 0 || v >= static_cast<int>(at.size()) || pos[v] != -1)
      throw std::invalid_argument("order is not a permutation");
    pos[v] = p;
  }
}

bool Order::valid() const {
  if (pos.size() != at.size()) return false;
  std::vector<char> seen(at.size(), 0);
  for (int p = 0; p < static_cast<int>(at.size()); ++p) {
    int v = at[p];
    if (v < 0 || v >= static_cast<int>(at.size()) || seen[v]) return false;
    if (pos[v] != p) return false;
    seen[v] = 1;
  }
  return true;
}

void Order::swap_positions(int p, int q) {
  std::swap(at[p], at[q]);
  pos[at[p]] = p;
  pos[at[q]] = q;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#' || line[i] == '%') continue;
    std::istringstream ls(line);
    std::int64_t u, v;
    if (!(ls >> u >> v)) throw ParseError(lineno, "expected two integer labels");
    if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex label");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing token '" + rest + "'");
    edges.emplace_back(u, v);
  }
  return Graph::from_labeled_edges(edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
  // Label order equals id order, so iterating ids ascending gives sorted lines.
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  serialize_edge_list(g, out);
  return out.str();
}

void write_order(const Graph& g, const Order& order, std::ostream& out) {
  for (int v : order.at) out << g.label(v) << '\n';
}

Order read_order(const Graph& g, std::istream& in) {
  std::vector<int> seq;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    std::istringstream ls(line);
    std::int64_t label;
    if (!(ls >> label)) throw ParseError(lineno, "expected a vertex label");
    auto id = g.id_of(label);
    if (!id) throw ParseError(lineno, "unknown vertex label " + std::to_string(label));
    seq.push_back(*id);
  }
  if (static_cast<int>(seq.size()) != g.vertex_count())
    throw std::invalid_argument("order file does not cover all vertices");
  return Order(std::move(seq));
}

std::vector<int> ball(const Graph& g, int v, int r, const std::vector<char>& forbidden) {
  assert(forbidden.empty() || !forbidden[v]);
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> out;
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  out.push_back(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (dist[u] >= r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1) continue;
      if (!forbidden.empty() && forbidden[w]) continue;
      dist[w] = dist[u] + 1;
      out.push_back(w);
      q.push(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ball(const Graph& g, int v, int r) { return ball(g, v, r, {}); }

Graph power_graph(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("power_graph: r must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : ball(g, v, r))
      if (u > v) edges.emplace_back(v, u);
  Graph p = Graph::from_edges(g.vertex_count(), edges);
  return p;
}

std::pair<Order, int> degeneracy_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  // min-heap of (degree, id) with lazy deletion
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> pq;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    pq.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  std::vector<int> at(n);
  int d = 0;
  for (int step = 0; step < n; ++step) {
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
    d = std::max(d, deg[v]);
    removed[v] = 1;
    at[n - 1 - step] = v;  // removed first -> last position
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      --deg[w];
      pq.emplace(deg[w], w);
    }
  }
  return {Order(std::move(at)), d};
}

std::vector<std::vector<int>> components(const Graph& g, const std::vector<char>& alive) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || (!alive.empty() && !alive[s])) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (seen[w] || (!alive.empty() && !alive[w])) continue;
        seen[w] = 1;
        q.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace colnum
