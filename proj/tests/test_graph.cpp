#include <doctest.h>

#include <algorithm>
#include <set>

#include "glpart/generators.hpp"
#include "glpart/graph.hpp"
#include "support/named.hpp"

using namespace glp;

namespace {

std::vector<Vertex> sorted_union_minus(const Graph& g, Vertex u, Vertex v) {
  std::set<Vertex> s;
  for (Vertex x : g.neighbors(u)) s.insert(x);
  for (Vertex x : g.neighbors(v)) s.insert(x);
  s.erase(u);
  s.erase(v);
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("graph construction keeps adjacency symmetric and sorted") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{2, 0}, {1, 3}, {0, 1}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  for (Vertex v = 0; v < 4; ++v) {
    const auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex u : nb) {
      CHECK(g.has_edge(u, v));
      CHECK(u != v);
    }
  }
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(Edge(5, 2).u == 2);
}

TEST_CASE("graph construction rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), InvalidArgument);
}

TEST_CASE("weighted graph validates weights") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(WeightedGraph(g, {1, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(WeightedGraph(g, {1, 1}), InvalidArgument);
  const WeightedGraph wg(g, {2, 5, 1});
  CHECK(wg.max_weight() == 5);
  CHECK(wg.total_weight() == 8);
  CHECK(!wg.unit_weights());
  CHECK(wg.weight_of(std::vector<Vertex>{0, 2}) == 3);
  CHECK(WeightedGraph(g).unit_weights());
}

TEST_CASE("contract_edge on a triangle leaves an edge") {
  const Contraction c = contract_edge(complete_graph(3), 0, 1);
  CHECK(c.graph.vertex_count() == 2);
  CHECK(c.graph.has_edge(0, 1));
  CHECK(c.merge.images[0] == std::vector<Vertex>{0, 1});
  CHECK(c.merge.images[1] == std::vector<Vertex>{2});
}

TEST_CASE("contract_edge on C4 gives a triangle") {
  const Contraction c = contract_edge(cycle_graph(4), 0, 1);
  CHECK(c.graph == complete_graph(3));
  CHECK(c.merge.images[0] == std::vector<Vertex>{0, 1});
}

TEST_CASE("contract_edge on P4 middle edge gives P3") {
  const Contraction c = contract_edge(path_graph(4), 1, 2);
  CHECK(c.graph == path_graph(3));
  CHECK(c.merge.images[1] == std::vector<Vertex>{1, 2});
}

TEST_CASE("contract_edge rejects non-edges and loops") {
  CHECK_THROWS_AS(contract_edge(cycle_graph(4), 0, 2), InvalidArgument);
  CHECK_THROWS_AS(contract_edge(cycle_graph(4), 1, 1), InvalidArgument);
  CHECK_THROWS_AS(contract_edge(cycle_graph(4), 1, 9), InvalidArgument);
}

TEST_CASE("contraction: merged degree and merge-map round trip on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = generate_chordal(12, 2, seed);
    for (const Edge& e : g.edges()) {
      const Contraction c = contract_edge(g, e.u, e.v);
      CHECK(c.graph.vertex_count() == g.vertex_count() - 1);
      CHECK(c.merge.original_count() == g.vertex_count());
      const Vertex z = std::min(e.u, e.v);
      CHECK(c.graph.degree(z) == sorted_union_minus(g, e.u, e.v).size());
      std::vector<Vertex> all;
      for (const auto& img : c.merge.images) all.insert(all.end(), img.begin(), img.end());
      std::sort(all.begin(), all.end());
      std::vector<Vertex> ids(g.vertex_count());
      for (Vertex v = 0; v < ids.size(); ++v) ids[v] = v;
      CHECK(all == ids);
      // Original edges map to edges or to the merged vertex itself.
      std::vector<Vertex> image_of(g.vertex_count());
      for (Vertex x = 0; x < c.merge.size(); ++x) {
        for (Vertex o : c.merge.images[x]) image_of[o] = x;
      }
      for (const Edge& f : g.edges()) {
        if (image_of[f.u] != image_of[f.v]) CHECK(c.graph.has_edge(image_of[f.u], image_of[f.v]));
      }
    }
  }
}

TEST_CASE("contract_edges contracts disjoint edges at once and sums weights") {
  const WeightedGraph wg(cycle_graph(6), {1, 2, 3, 4, 5, 6});
  const std::vector<Edge> edges{{0, 1}, {3, 4}};
  const WeightedContraction c = contract_edges(wg, edges);
  CHECK(c.graph.graph().vertex_count() == 4);
  CHECK(c.graph.graph() == cycle_graph(4));
  CHECK(std::vector<Weight>(c.graph.weights().begin(), c.graph.weights().end()) ==
        std::vector<Weight>{3, 3, 9, 6});
  CHECK(c.merge.expand(std::vector<Vertex>{0, 2}) == std::vector<Vertex>{0, 1, 3, 4});
  const std::vector<Edge> touching{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(contract_edges(cycle_graph(6), touching), InvalidArgument);
}

TEST_CASE("merge maps compose") {
  const Contraction first = contract_edge(path_graph(5), 0, 1);   // 4 vertices
  const Contraction second = contract_edge(first.graph, 0, 1);    // 3 vertices
  const MergeMap both = first.merge.then(second.merge);
  CHECK(both.images[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(both.images[2] == std::vector<Vertex>{4});
}

TEST_CASE("induced_subgraph examples") {
  const InducedSubgraph k = induced_subgraph(complete_graph(4), std::vector<Vertex>{3, 1, 2});
  CHECK(k.graph == complete_graph(3));
  CHECK(k.original == std::vector<Vertex>{1, 2, 3});
  CHECK(induced_subgraph(cycle_graph(5), std::vector<Vertex>{1, 2, 3}).graph == path_graph(3));
  const InducedSubgraph opp = induced_subgraph(cycle_graph(4), std::vector<Vertex>{0, 2});
  CHECK(opp.graph.vertex_count() == 2);
  CHECK(opp.graph.edge_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(cycle_graph(4), std::vector<Vertex>{0, 4}), InvalidArgument);
}

TEST_CASE("induced_subgraph on all of V is the identity") {
  const Graph g = named::double_house();
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  CHECK(induced_subgraph(g, all).graph == g);
}

TEST_CASE("is_connected_set examples") {
  const Graph p = path_graph(3);
  CHECK_FALSE(is_connected_set(p, std::vector<Vertex>{0, 2}));
  CHECK(is_connected_set(p, std::vector<Vertex>{0, 1}));
  for (Vertex v = 0; v < 3; ++v) CHECK(is_connected_set(p, std::vector<Vertex>{v}));
  CHECK_THROWS_AS(is_connected_set(p, std::vector<Vertex>{}), InvalidArgument);
  CHECK_THROWS_AS(is_connected_set(p, std::vector<Vertex>{7}), InvalidArgument);
}

TEST_CASE("component labels skip removed vertices") {
  std::vector<char> removed(5, 0);
  removed[2] = 1;
  std::size_t count = 0;
  const auto label = component_labels(path_graph(5), removed, &count);
  CHECK(count == 2);
  CHECK(label[0] == 0);
  CHECK(label[1] == 0);
  CHECK(label[2] == kNoComponent);
  CHECK(label[3] == 1);
  CHECK(is_connected(path_graph(5)));
  CHECK_FALSE(is_connected(Graph(2)));
}
