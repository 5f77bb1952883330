#include <doctest.h>

#include <random>
#include <set>

#include "hjump/catalog.hpp"
#include "hjump/error.hpp"
#include "oracles.hpp"

using namespace hjump;

TEST_CASE("catalog sizes for small p") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
  for (int p = 1; p <= 6; ++p) CHECK(enumerate_graphs(p).size() == expected[p - 1]);
}

TEST_CASE("catalog matches pairwise-isomorphism dedupe") {
  for (int p = 1; p <= 5; ++p) {
    const auto classes = oracle::iso_classes(p);
    const GraphCatalog& catalog = enumerate_graphs(p);
    REQUIRE(catalog.size() == classes.size());
    for (const Graph& rep : classes) {
      int matches = 0;
      for (const Graph& member : catalog.members) matches += oracle::isomorphic(rep, member);
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("members are sorted by canonical code and stored canonically") {
  const GraphCatalog& catalog = enumerate_graphs(5);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    CHECK(canonical_code(catalog.members[i]) == catalog.codes[i]);
    CHECK(graph_from_code(5, catalog.codes[i]) == catalog.members[i]);
    if (i) CHECK(catalog.codes[i - 1] < catalog.codes[i]);
  }
}

TEST_CASE("canonical code is a complete invariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph a = oracle::random_graph(rng, n);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabelled;
    for (auto [u, v] : a.edges()) relabelled.emplace_back(perm[u], perm[v]);
    CHECK(canonical_code(a) == canonical_code(Graph(n, relabelled)));
    if (n <= 6) {
      const Graph b = oracle::random_graph(rng, n);
      CHECK((canonical_code(a) == canonical_code(b)) == oracle::isomorphic(a, b));
    }
  }
}

TEST_CASE("every random four-vertex graph has exactly one catalog class") {
  std::mt19937_64 rng(3);
  const GraphCatalog& catalog = enumerate_graphs(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 4);
    int matches = 0;
    for (const Graph& member : catalog.members) matches += oracle::isomorphic(g, member);
    CHECK(matches == 1);
    CHECK(catalog.index_of(g) >= 0);
  }
  CHECK(catalog.index_of(Graph(3)) == -1);
}

TEST_CASE("catalog caps and parameter checks") {
  CHECK_THROWS_AS(enumerate_graphs(0), ParameterError);
  CHECK_THROWS_AS(enumerate_graphs(5, 4), CapExceeded);
  CHECK_THROWS_AS(canonical_code(Graph(12)), CapExceeded);
}
