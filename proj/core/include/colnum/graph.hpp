#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace colnum {

/// Thrown by parse_edge_list on malformed input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Immutable undirected simple graph. Vertices are dense ids 0..n-1 with
/// sorted adjacency lists; the original file labels are kept for output.
/// Ids are assigned in increasing label order, so a graph is fully determined
/// by its edge set regardless of input line order.
class Graph {
 public:
  Graph() = default;

  // Internal-id constructor; labels default to 0..n-1. Edges are deduplicated,
  // self-loops dropped.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph from_labeled_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                                  const std::vector<std::int64_t>& extra_labels = {});

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  std::int64_t label(int v) const { return labels_[v]; }
  const std::vector<std::int64_t>& labels() const { return labels_; }
  std::optional<int> id_of(std::int64_t label) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::int64_t> labels_;  // internal id -> original label, strictly increasing
  int m_ = 0;
};

/// A linear order L of the vertices: at[p] is the vertex at position p,
/// pos[v] the position of vertex v. Smaller position = smaller in L.
struct Order {
  std::vector<int> at;
  std::vector<int> pos;

  Order() = default;
  explicit Order(std::vector<int> sequence);

  int size() const { return static_cast<int>(at.size()); }
  bool valid() const;
  void swap_positions(int p, int q);
};

/// Parses whitespace-separated "u v" lines. Lines starting with '#' or '%'
/// and blank lines are skipped. Duplicate edges collapse, self-loops are
/// dropped, labels are remapped to dense ids. Empty input yields n = 0.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);

/// Canonical form: one "u v" per line with u < v in original labels, sorted.
void serialize_edge_list(const Graph& g, std::ostream& out);
std::string serialize_edge_list(const Graph& g);

/// One original label per line, L-smallest first.
void write_order(const Graph& g, const Order& order, std::ostream& out);
Order read_order(const Graph& g, std::istream& in);

/// Closed r-neighborhood of v in G - forbidden, as a sorted vertex list.
/// forbidden is an n-sized mask; v must not be forbidden.
std::vector<int> ball(const Graph& g, int v, int r, const std::vector<char>& forbidden);
std::vector<int> ball(const Graph& g, int v, int r);

/// G^r: same vertices, edges exactly the pairs at distance <= r. r >= 1.
Graph power_graph(const Graph& g, int r);

/// Repeatedly removes a minimum-degree vertex (ties by smallest id), filling
/// the order from the last position backwards, so every vertex ends up with
/// at most d earlier neighbors. Returns the order and the degeneracy d.
std::pair<Order, int> degeneracy_order(const Graph& g);

/// Connected components as sorted vertex lists, restricted to the vertices
/// with alive[v] != 0 (alive may be empty meaning all).
std::vector<std::vector<int>> components(const Graph& g, const std::vector<char>& alive = {});

}  // namespace colnum
