#include <doctest.h>

#include <queue>

#include "colnum/dtf.hpp"
#include "colnum/reach.hpp"
#include "oracles.hpp"

using namespace colnum;
namespace ct = colnum::testing;

TEST_SUITE_BEGIN("dtf");

TEST_CASE("cherry: one fraternal edge at weight 2") {
  // path a-b-c oriented b->a, b->c via the order (a, c, b)
  Graph p3 = ct::path_graph(3);
  DtfGraph dtf = dtf_augment(p3, 2, Order({0, 2, 1}));
  CHECK(dtf.weight(1, 0) == 1);
  CHECK(dtf.weight(1, 2) == 1);
  bool fraternal = (dtf.weight(0, 2) == 2) != (dtf.weight(2, 0) == 2);
  CHECK(fraternal);
  CHECK(dtf.arc_count() == 3);
}

TEST_CASE("chain: one transitive arc at weight 2") {
  // path u-v-w oriented w->v->u via the order (u, v, w)
  Graph p3 = ct::path_graph(3);
  DtfGraph dtf = dtf_augment(p3, 2, Order({0, 1, 2}));
  CHECK(dtf.weight(1, 0) == 1);
  CHECK(dtf.weight(2, 1) == 1);
  CHECK(dtf.weight(2, 0) == 2);
  CHECK(dtf.arc_count() == 3);
}

TEST_CASE("inward orientation: no augmentation arcs at all") {
  // a->b and c->b share no tail and form no chain
  Graph p3 = ct::path_graph(3);
  DtfGraph dtf = dtf_augment(p3, 2, Order({1, 0, 2}));
  CHECK(dtf.weight(0, 1) == 1);
  CHECK(dtf.weight(2, 1) == 1);
  CHECK(dtf.arc_count() == 2);
}

TEST_CASE("star: degeneracy orientation points at the center, nothing new") {
  // center as the largest id keeps it in the elimination graph until the
  // end, so every edge orients leaf -> center and no tail is shared
  std::vector<std::pair<int, int>> edges;
  for (int leaf = 0; leaf < 5; ++leaf) edges.emplace_back(leaf, 5);
  Graph star = Graph::from_edges(6, edges);
  DtfGraph dtf = dtf_augment(star, 3);
  CHECK(dtf.arc_count() == 5);
  for (int leaf = 0; leaf < 5; ++leaf) CHECK(dtf.weight(leaf, 5) == 1);
  Order order = order_from_dtf(star, 3);
  CHECK(wcol_of_order(star, order, 3) == 2);

  // with the center at id 0 the tie-breaking removes it mid-way; the
  // certificate still holds even though extra transitive arcs appear
  Graph star0 = ct::star_graph(5);
  DtfGraph dtf0 = dtf_augment(star0, 3);
  auto [order0, c0] = degeneracy_order(dtf0.underlying());
  CHECK(wcol_of_order(star0, order0, 3) <= (dtf0.max_out_degree() + 1) * c0 + 1);
}

TEST_CASE("orders from augmentations: forced clique value") {
  Graph k4 = ct::complete_graph(4);
  for (int r = 1; r <= 3; ++r) CHECK(wcol_of_order(k4, order_from_dtf(k4, r), r) == 4);
}

TEST_CASE("out-degree certificate bounds the evaluated order") {
  std::vector<Graph> graphs{ct::cycle_graph(6), ct::random_connected_graph(24, 16, 3),
                            ct::random_connected_graph(30, 24, 4)};
  for (const auto& g : graphs) {
    for (int r = 1; r <= 4; ++r) {
      DtfGraph dtf = dtf_augment(g, r);
      auto [order, c] = degeneracy_order(dtf.underlying());
      int bound = (dtf.max_out_degree() + 1) * c + 1;
      CHECK(wcol_of_order(g, order, r) <= bound);
    }
  }
}

TEST_CASE("arcs accumulate monotonically over the steps") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = ct::random_connected_graph(16, 10, seed);
    for (int r = 2; r <= 4; ++r) {
      DtfGraph prev = dtf_augment(g, r - 1);
      DtfGraph cur = dtf_augment(g, r);
      for (int u = 0; u < g.vertex_count(); ++u)
        for (auto [v, w] : prev.out_arcs(u)) {
          CHECK(cur.has_arc(u, v));
          CHECK(cur.weight(u, v) == w);  // first-appearance weights agree
        }
    }
  }
}

TEST_CASE("distance property up to r") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = ct::random_connected_graph(seed < 3 ? 30 : 20, 12, seed);
    int n = g.vertex_count();
    for (int r = 1; r <= 4; ++r) {
      DtfGraph dtf = dtf_augment(g, r);
      for (int u = 0; u < n; ++u) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
          int x = q.front();
          q.pop();
          for (int y : g.neighbors(x))
            if (dist[y] == -1) {
              dist[y] = dist[x] + 1;
              q.push(y);
            }
        }
        for (int v = u + 1; v < n; ++v) {
          int d = dist[v];
          if (d < 1 || d > r) continue;
          bool witnessed = dtf.weight(u, v) == d || dtf.weight(v, u) == d;
          if (!witnessed) {
            for (auto [w, wu] : dtf.out_arcs(u)) {
              int wv = dtf.weight(v, w);
              if (wv > 0 && wu + wv == d) {
                witnessed = true;
                break;
              }
            }
          }
          CHECK(witnessed);
        }
      }
    }
  }
}

TEST_SUITE_END();
