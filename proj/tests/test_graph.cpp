#include <doctest.h>

#include <queue>
#include <sstream>

#include "colnum/graph.hpp"
#include "oracles.hpp"

using namespace colnum;
namespace ct = colnum::testing;

TEST_SUITE_BEGIN("graph");

TEST_CASE("parse: two-edge path") {
  Graph g = parse_edge_list(std::string("1 2\n2 3"));
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("parse: duplicates collapse") {
  Graph g = parse_edge_list(std::string("1 2\n1 2\n2 1"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse: self-loop dropped") {
  Graph g = parse_edge_list(std::string("5 5\n5 6"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse: empty input is the empty graph") {
  Graph g = parse_edge_list(std::string(""));
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parse: comments and blank lines") {
  Graph g = parse_edge_list(std::string("# snap header\n% konect header\n\n  \n7 9\n"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse: malformed lines carry the line number") {
  CHECK_THROWS_AS(parse_edge_list(std::string("1 2\nbroken")), ParseError);
  try {
    parse_edge_list(std::string("1 2\n\n3"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list(std::string("1 2 3")), ParseError);
  CHECK_THROWS_AS(parse_edge_list(std::string("-1 2")), ParseError);
}

TEST_CASE("labels are remapped to dense ids and kept") {
  Graph g = parse_edge_list(std::string("100 7\n7 2000"));
  CHECK(g.vertex_count() == 3);
  REQUIRE(g.id_of(7).has_value());
  CHECK(g.label(*g.id_of(7)) == 7);
  CHECK(!g.id_of(8).has_value());
  // ids follow sorted label order
  CHECK(g.label(0) == 7);
  CHECK(g.label(2) == 2000);
}

TEST_CASE("serialize round-trips the canonical form") {
  Graph g = parse_edge_list(std::string("4 1\n9 4\n1 9\n30 9"));
  std::string canon = serialize_edge_list(g);
  Graph h = parse_edge_list(canon);
  CHECK(serialize_edge_list(h) == canon);
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
}

TEST_CASE("ball basics") {
  Graph p3 = ct::path_graph(3);
  CHECK(ball(p3, 0, 1) == std::vector<int>{0, 1});
  std::vector<char> cut(3, 0);
  cut[1] = 1;
  CHECK(ball(p3, 0, 2, cut) == std::vector<int>{0});
  CHECK(ball(p3, 1, 0) == std::vector<int>{1});
}

TEST_CASE("ball equals full-BFS distances on random graphs") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = ct::random_graph(50, 110, seed);
    for (int v = 0; v < g.vertex_count(); v += 7) {
      for (int r = 0; r <= 3; ++r) {
        // reference: full BFS then filter by distance
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> q;
        dist[v] = 0;
        q.push(v);
        while (!q.empty()) {
          int u = q.front();
          q.pop();
          for (int w : g.neighbors(u))
            if (dist[w] == -1) {
              dist[w] = dist[u] + 1;
              q.push(w);
            }
        }
        std::vector<int> expect;
        for (int u = 0; u < g.vertex_count(); ++u)
          if (dist[u] != -1 && dist[u] <= r) expect.push_back(u);
        CHECK(ball(g, v, r) == expect);
      }
    }
  }
}

TEST_CASE("power graph: P3 squared is a triangle, r=1 is the identity") {
  Graph p3 = ct::path_graph(3);
  Graph sq = power_graph(p3, 2);
  CHECK(sq.edge_count() == 3);
  CHECK(serialize_edge_list(power_graph(p3, 1)) == serialize_edge_list(p3));
  Graph star3 = ct::star_graph(3);
  CHECK(power_graph(star3, 2).edge_count() == 6);  // K_4
}

TEST_CASE("power graph is monotone in r") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = ct::random_connected_graph(24, 10, seed);
    for (int r = 1; r <= 3; ++r) {
      Graph a = power_graph(g, r), b = power_graph(g, r + 1);
      for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : a.neighbors(v)) CHECK(b.has_edge(v, u));
    }
  }
}

TEST_CASE("degeneracy order: known values") {
  CHECK(degeneracy_order(ct::complete_graph(4)).second == 3);
  CHECK(degeneracy_order(ct::cycle_graph(5)).second == 2);
  CHECK(degeneracy_order(ct::star_graph(6)).second == 1);
  CHECK(degeneracy_order(ct::path_graph(9)).second == 1);
}

TEST_CASE("degeneracy order: every vertex has at most d earlier neighbors") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = ct::random_graph(40, 100, seed);
    auto [order, d] = degeneracy_order(g);
    REQUIRE(order.valid());
    int worst = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      int earlier = 0;
      for (int u : g.neighbors(v))
        if (order.pos[u] < order.pos[v]) ++earlier;
      worst = std::max(worst, earlier);
    }
    CHECK(worst <= d);
    CHECK(worst == d);  // d is attained
  }
}

TEST_CASE("order io round trip") {
  Graph g = parse_edge_list(std::string("10 20\n20 30\n30 40"));
  auto [order, d] = degeneracy_order(g);
  std::ostringstream out;
  write_order(g, order, out);
  std::istringstream in(out.str());
  Order back = read_order(g, in);
  CHECK(back.at == order.at);
}

TEST_CASE("components respect the alive mask") {
  Graph g = ct::path_graph(5);
  std::vector<char> alive(5, 1);
  alive[2] = 0;
  auto comps = components(g, alive);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{3, 4});
}

TEST_SUITE_END();
