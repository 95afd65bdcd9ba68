#include <doctest.h>

#include <algorithm>
#include <queue>

#include "colnum/distance_tree.hpp"
#include "oracles.hpp"

using namespace colnum;
namespace ct = colnum::testing;

namespace {

std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
  return out;
}

int graph_distance(const Graph& g, int a, int b) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist[b];
}

}  // namespace

TEST_SUITE_BEGIN("uqw_tree");

TEST_CASE("tree construction on P5") {
  Graph p5 = ct::path_graph(5);
  DistanceTree t = build_distance_tree(p5, {0, 2, 4}, 2);
  REQUIRE(t.nodes.size() == 3);
  CHECK(t.nodes[0].vertex == 0);
  // v3 at distance 2 goes left, v5 at distance 4 goes right
  REQUIRE(t.nodes[0].left != -1);
  REQUIRE(t.nodes[0].right != -1);
  CHECK(t.nodes[t.nodes[0].left].vertex == 2);
  CHECK(t.nodes[t.nodes[0].right].vertex == 4);
}

TEST_CASE("all-far elements build a right spine, a clique a left spine") {
  Graph far = Graph::from_edges(6, {});
  DistanceTree spine = build_distance_tree(far, {0, 1, 2, 3, 4, 5}, 2);
  auto [chain, kind] = longest_monotone_subpath(spine);
  CHECK(kind == BranchKind::Right);
  CHECK(chain == std::vector<int>{0, 1, 2, 3, 4, 5});

  Graph k5 = ct::complete_graph(5);
  DistanceTree left = build_distance_tree(k5, {0, 1, 2, 3, 4}, 2);
  auto [lchain, lkind] = longest_monotone_subpath(left);
  CHECK(lkind == BranchKind::Left);
  CHECK(lchain == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("subtree direction encodes distances to every ancestor") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = ct::random_graph(30, 45, seed);
    std::vector<int> elements;
    Rng rng(seed);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng.below_int(2)) elements.push_back(v);
    if (elements.empty()) continue;
    DistanceTree t = build_distance_tree(g, elements, 2);
    // every vertex appears exactly once
    std::vector<int> labels;
    for (const auto& node : t.nodes) labels.push_back(node.vertex);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == elements);
    // walk to the root: the first branch direction from each ancestor bounds
    // the distance between the two labels
    for (size_t i = 0; i < t.nodes.size(); ++i) {
      int node = static_cast<int>(i);
      int child = node;
      for (int anc = t.nodes[node].parent; anc != -1; anc = t.nodes[anc].parent) {
        int d = graph_distance(g, t.nodes[node].vertex, t.nodes[anc].vertex);
        if (d == -1) d = g.vertex_count() + 1;
        if (t.nodes[child].bit == 0)
          CHECK(d <= 2);
        else
          CHECK(d > 2);
        child = anc;
      }
    }
  }
}

TEST_CASE("star: one deletion frees all leaves") {
  Graph star = ct::star_graph(6);
  std::vector<int> leaves{1, 2, 3, 4, 5, 6};
  for (auto variant : {TreeVariant::Tree1, TreeVariant::Tree2, TreeVariant::LdIt}) {
    UqwResult res = uqw_tree(star, leaves, 2, variant);
    REQUIRE(verify_uqw(star, res));
    CHECK(res.deleted == std::vector<int>{0});
    CHECK(res.independent == leaves);
    CHECK(score(star, res) == 6);
  }
}

TEST_CASE("already scattered input: nothing deleted, everything kept") {
  Graph far = Graph::from_edges(5, {});
  for (auto variant : {TreeVariant::Tree1, TreeVariant::Tree2, TreeVariant::LdIt}) {
    UqwResult res = uqw_tree(far, all_vertices(far), 2, variant);
    REQUIRE(verify_uqw(far, res));
    CHECK(res.deleted.empty());
    CHECK(res.independent == all_vertices(far));
  }
}

TEST_CASE("double star: both centers go, all leaves stay") {
  Graph ds = ct::double_star(3, 3);  // centers 0 and 1, leaves 2..7
  std::vector<int> leaves{2, 3, 4, 5, 6, 7};
  UqwResult res = uqw_tree(ds, leaves, 2, TreeVariant::Tree1);
  REQUIRE(verify_uqw(ds, res));
  CHECK(res.deleted == std::vector<int>{0, 1});
  CHECK(res.independent == leaves);
}

TEST_CASE("left chains of an independent input sit at pairwise distance two") {
  Graph star = ct::star_graph(7);
  std::vector<int> leaves{1, 2, 3, 4, 5, 6, 7};
  DistanceTree t = build_distance_tree(star, leaves, 2);
  auto [chain, kind] = longest_monotone_subpath(t);
  REQUIRE(kind == BranchKind::Left);
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = i + 1; j < chain.size(); ++j)
      CHECK(graph_distance(star, chain[i], chain[j]) == 2);
}

TEST_CASE("every variant verifies across radii on random graphs") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Graph g = ct::random_connected_graph(26, 14, seed);
    for (int r = 1; r <= 5; ++r) {
      for (auto variant : {TreeVariant::Tree1, TreeVariant::Tree2, TreeVariant::LdIt}) {
        UqwResult res = uqw_tree(g, all_vertices(g), r, variant);
        CHECK(verify_uqw(g, res));
        CHECK(!res.independent.empty());
      }
    }
  }
}

TEST_SUITE_END();
