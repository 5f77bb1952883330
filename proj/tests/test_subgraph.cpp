#include <doctest.h>

#include <random>

#include "hjump/catalog.hpp"
#include "hjump/subgraph.hpp"
#include "oracles.hpp"

using namespace hjump;

TEST_CASE("named containment cases") {
  const Graph c4 = Graph::cycle(4);
  const auto p3 = contains_induced(c4, Graph::path(3));
  REQUIRE(p3);
  CHECK(is_induced_embedding(c4, Graph::path(3), *p3));
  CHECK_FALSE(contains_induced(c4, Graph::complete(3)));
  const auto self = contains_induced(c4, c4);
  REQUIRE(self);
  CHECK(is_induced_embedding(c4, c4, *self));
  CHECK(contains_induced(Graph(3), Graph(0)));
  CHECK_FALSE(contains_induced(Graph(2), Graph(3)));
}

TEST_CASE("containment agrees with the tuple oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 5);
    const Graph h = oracle::random_graph(rng, 1 + trial % 4);
    const auto found = contains_induced(g, h);
    REQUIRE(found.has_value() == oracle::contains(g, h));
    if (found) CHECK(is_induced_embedding(g, h, *found));
  }
}

TEST_CASE("forbidden subgraph search") {
  const auto k5 = find_forbidden(Graph::complete(5), 2);
  REQUIRE(k5);
  CHECK(*k5 == Graph(2));
  CHECK_FALSE(find_forbidden(Graph(1), 1));
  // C5 avoids both K3 and the edgeless triple; the edgeless one comes first
  // in catalog order.
  const auto c5 = find_forbidden(Graph::cycle(5), 3);
  REQUIRE(c5);
  CHECK(*c5 == Graph(3));
  CHECK_FALSE(oracle::contains(Graph::cycle(5), Graph::complete(3)));
}

TEST_CASE("forbidden search agrees with brute force over the catalog") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 6);
    for (int p = 1; p <= 4; ++p) {
      bool any_missing = false;
      for (const Graph& h : oracle::iso_classes(p)) any_missing |= !oracle::contains(g, h);
      const auto found = find_forbidden(g, p);
      CHECK(found.has_value() == any_missing);
      if (found) CHECK_FALSE(oracle::contains(g, *found));
    }
  }
}
