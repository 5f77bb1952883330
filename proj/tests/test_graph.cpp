#include <doctest.h>

#include <random>

#include "hjump/error.hpp"
#include "hjump/graph.hpp"
#include "oracles.hpp"

using namespace hjump;

namespace {

void check_simple(const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    CHECK_FALSE(g.has_edge(u, u));
    for (Vertex v : g.neighbours(u)) CHECK(g.has_edge(v, u));
  }
}

}  // namespace

TEST_CASE("construction dedupes edges and rejects loops and bad endpoints") {
  const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), DomainError);
  check_simple(g);
}

TEST_CASE("named families") {
  CHECK(Graph::complete(5).edge_count() == 10);
  CHECK(Graph::cycle(5).edge_count() == 5);
  CHECK(Graph::path(4).edge_count() == 3);
  CHECK(Graph::cycle(5).degree_sequence() == std::vector<std::size_t>(5, 2));
}

TEST_CASE("disjoint union") {
  const Graph k2 = Graph::complete(2);
  const std::vector<Graph> two{k2, k2};
  auto [g, maps] = disjoint_union(two);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.has_edge(1, 2));
  REQUIRE(maps.size() == 2);
  CHECK(maps[1].image == std::vector<Vertex>{2, 3});

  auto [empty, none] = disjoint_union(std::vector<Graph>{Graph()});
  CHECK(empty.vertex_count() == 0);
  CHECK(none.at(0).size() == 0);

  const std::vector<Graph> mixed{Graph::cycle(5), Graph::complete(3)};
  auto [u, unused] = disjoint_union(mixed);
  CHECK(u.vertex_count() == 8);
  CHECK(u.edge_count() == 8);
  CHECK(connected_components(u).size() == 2);
  check_simple(u);
}

TEST_CASE("universal clique") {
  auto [k4, added] = add_universal_clique(Graph::complete(3), 1);
  CHECK(k4 == Graph::complete(4));
  CHECK(added == std::vector<Vertex>{3});
  CHECK(add_universal_clique(Graph::cycle(4), 0).first == Graph::cycle(4));
  auto [g, clique] = add_universal_clique(Graph(3), 2);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 7);
  check_simple(g);
}

TEST_CASE("isolated vertices") {
  const Graph g = add_isolated(Graph::complete(2), 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 1);
  CHECK(add_isolated(Graph::cycle(4), 0) == Graph::cycle(4));
  CHECK(add_isolated(Graph::cycle(4), 3).degree_sequence() == std::vector<std::size_t>{2, 2, 2, 2, 0, 0, 0});
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(3)) == Graph(3));
  const Graph c5 = Graph::cycle(5);
  CHECK(complement(complement(c5)) == c5);
  CHECK(oracle::isomorphic(complement(c5), c5));
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
  CHECK(are_isomorphic(Graph::complete(3), Graph::cycle(3)));
  CHECK_FALSE(are_isomorphic(Graph::path(3), Graph::complete(3)));
  CHECK(are_isomorphic(Graph::cycle(5), complement(Graph::cycle(5))));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Graph a = oracle::random_graph(rng, n);
    const Graph b = oracle::random_graph(rng, n);
    CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabelled;
    for (auto [u, v] : a.edges()) relabelled.emplace_back(perm[u], perm[v]);
    CHECK(are_isomorphic(a, Graph(n, relabelled)));
  }
}

TEST_CASE("components and induced subgraphs") {
  const Graph g(6, {{0, 1}, {1, 2}, {4, 5}});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(comps[1] == std::vector<Vertex>{3});
  CHECK(comps[2] == std::vector<Vertex>{4, 5});

  const std::vector<Vertex> pick{2, 1, 5};
  auto [sub, map] = induced_subgraph(g, pick);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.has_edge(0, 1));
  CHECK(sub.edge_count() == 1);
  CHECK(map.image == pick);
  CHECK(map.is_injective());
}
