#include <doctest.h>

#include <random>

#include "hjump/error.hpp"
#include "hjump/problems.hpp"
#include "hjump/subgraph.hpp"
#include "oracles.hpp"

using namespace hjump;

namespace {

// K4 plus one component per 3-vertex graph.
Graph no_instance_p3() {
  std::vector<Graph> parts{Graph::complete(4)};
  for (const Graph& h : oracle::iso_classes(3)) parts.push_back(h);
  return disjoint_union(parts).first;
}

bool oracle_cos(const Graph& g, int p) {
  if (oracle::colourable(g, p)) return true;
  for (int order = 1; order <= p; ++order)
    for (const Graph& h : oracle::iso_classes(order))
      if (!oracle::contains(g, h)) return true;
  return false;
}

}  // namespace

TEST_CASE("mode names") {
  CHECK(parse_mode("faithful") == Mode::Faithful);
  CHECK(to_string(Mode::Generalized) == "generalized");
  CHECK_THROWS_AS(parse_mode("loose"), DomainError);
}

TEST_CASE("colouring-or-subgraph decisions") {
  const Decision k5 = decide_cos(CosInstance::generalized(Graph::complete(5), 2));
  CHECK(k5.yes);
  REQUIRE(k5.forbidden);
  CHECK(*k5.forbidden == Graph(2));
  CHECK(decide_cos(CosInstance::generalized(Graph(1), 1)).yes);
  CHECK_FALSE(decide_cos(CosInstance::generalized(no_instance_p3(), 3)).yes);
  CHECK_THROWS_AS(CosInstance::generalized(Graph(3), 0), ParameterError);
  CHECK(CosInstance::faithful(Graph(16)).p == 2);
}

TEST_CASE("colouring-or-subgraph agrees with brute force") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 6, 0.3 + 0.1 * (trial % 5));
    for (int p = 1; p <= 3; ++p) CHECK(decide_cos(CosInstance::generalized(g, p)).yes == oracle_cos(g, p));
  }
}

TEST_CASE("colour-path-or-subgraph decisions") {
  const Graph k2 = Graph::complete(2);
  CHECK(decide_cpos(CposInstance::generalized(k2, Colouring(3, {1, 2}), Colouring(3, {2, 1}), 3)).yes);
  const Decision k3 =
      decide_cpos(CposInstance::generalized(Graph::complete(3), Colouring(3, {1, 2, 3}), Colouring(3, {2, 1, 3}), 3));
  CHECK(k3.yes);
  REQUIRE(k3.forbidden);
  CHECK(*k3.forbidden == Graph(3));
  CHECK_THROWS_AS(CposInstance::generalized(k2, Colouring(3, {1, 1}), Colouring(3, {1, 2}), 3), ImproperColouring);
}

TEST_CASE("succinct decisions") {
  CircuitBuilder b(2);
  CHECK(decide_scos(ScosInstance{b.build(b.constant(false))}).yes);
  CHECK_FALSE(decide_scos(ScosInstance{encode_longhand(Graph::complete(2))}).yes);
  CHECK(decide_scos(ScosInstance{encode_longhand(Graph(2))}).yes);
}

TEST_CASE("three-colouring reduction layout") {
  const CosReduction k3 = reduce_3col(Graph::complete(3), Mode::Generalized, 4);
  CHECK(k3.output_graph().vertex_count() == 48);
  CHECK(k3.clique_k.size() == 1);
  CHECK(k3.catalog_maps.size() == 11);
  CHECK(k3.padding.empty());
  CHECK(partitions_vertices(k3));
  CHECK_THROWS_AS(reduce_3col(Graph::complete(3), Mode::Generalized, 3), ParameterError);
  CHECK_THROWS_AS(reduce_3col(Graph::complete(3), Mode::Generalized), ParameterError);
  CHECK_THROWS_AS(reduce_3col(Graph::complete(3), Mode::Faithful), ParameterError);

  const CosReduction big = reduce_3col(Graph::cycle(200), Mode::Faithful);
  CHECK(big.p == 4);
  CHECK(big.output_graph().vertex_count() == 600);
  CHECK(big.padding.size() == 355);
  CHECK(partitions_vertices(big));
}

TEST_CASE("forward and backward colourings") {
  const CosReduction k3 = reduce_3col(Graph::complete(3), Mode::Generalized, 4);
  const Colouring forward = cos_forward_colouring(k3, Colouring(3, {1, 2, 3}));
  CHECK(is_proper(k3.output_graph(), forward));
  CHECK(forward[k3.clique_k[0]] == 4);
  for (const auto& map : k3.catalog_maps)
    for (Vertex q = 0; q < map.size(); ++q) CHECK(forward[map[q]] == q + 1);
  CHECK(cos_backward_colouring(k3, forward) == Colouring(3, {1, 2, 3}));

  const CosReduction edgeless = reduce_3col(Graph(4), Mode::Generalized, 5);
  CHECK(is_proper(edgeless.output_graph(), cos_forward_colouring(edgeless, Colouring::uniform(3, 4))));
  CHECK_THROWS_AS(cos_forward_colouring(k3, Colouring(3, {1, 1, 2})), ImproperColouring);

  // Permuted clique colours come back as a proper 3-colouring.
  std::vector<Colour> shuffled(forward.colours().begin(), forward.colours().end());
  for (Vertex v : k3.graph_map.image) shuffled[v] = shuffled[v] == 1 ? 4 : shuffled[v];
  shuffled[k3.clique_k[0]] = 1;
  const Colouring swapped(4, shuffled);
  REQUIRE(is_proper(k3.output_graph(), swapped));
  CHECK(is_proper(Graph::complete(3), cos_backward_colouring(k3, swapped)));
}

TEST_CASE("three-colouring reduction preserves the answer") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::iso_classes(n)) {
      const CosReduction r = reduce_3col(g, Mode::Generalized, 4);
      const Decision d = decide_cos(r.instance);
      CHECK(d.yes == oracle::colourable(g, 3));
      if (d.colouring) CHECK(is_proper(g, cos_backward_colouring(r, *d.colouring)));
    }
  }
}

TEST_CASE("colour-path reduction layout and endpoints") {
  const Graph k2 = Graph::complete(2);
  const Colouring a(4, {1, 2});
  const CposReduction r = reduce_4cp(k2, a, a, Mode::Generalized, 5);
  CHECK(r.clique_k.size() == 1);
  CHECK(r.clique_l.size() == 4);
  CHECK(r.output_graph().vertex_count() == 2 + 1 + 4 + 34 * 5);
  CHECK(partitions_vertices(r));
  CHECK(is_proper(r.output_graph(), r.instance.alpha));
  CHECK(decide_cpos(r.instance).yes);
  const Graph& out = r.output_graph();
  for (Vertex x : r.clique_k) {
    for (Vertex v : r.graph_map.image) CHECK(out.has_edge(x, v));
    for (Vertex y : r.clique_l) CHECK(out.has_edge(x, y));
  }
  for (Vertex y : r.clique_l)
    for (Vertex v : r.graph_map.image) CHECK_FALSE(out.has_edge(y, v));
  CHECK_THROWS_AS(reduce_4cp(k2, a, a, Mode::Generalized, 4), ParameterError);
  CHECK_THROWS_AS(reduce_4cp(k2, a, Colouring(4, {1, 1}), Mode::Generalized, 5), ImproperColouring);
}

TEST_CASE("path lift and restriction") {
  const Graph k2 = Graph::complete(2);
  const Colouring a(4, {1, 2});
  const Colouring b(4, {3, 2});
  const CposReduction r = reduce_4cp(k2, a, b, Mode::Generalized, 5);
  CHECK(cpos_lift_path(r, ReconfigPath{4, {}}).empty());
  const ReconfigPath lifted = cpos_lift_path(r, ReconfigPath{4, {a, b}});
  CHECK(lifted.size() == 2);
  VectorSource source(lifted.steps);
  CHECK(validate_path_streaming(r.output_graph(), 5, r.instance.alpha, r.instance.beta, source));
  const ReconfigPath back = cpos_restrict_path(r, lifted);
  CHECK(back.steps == std::vector<Colouring>{a, b});
}

TEST_CASE("colour-path reduction preserves reachability on small graphs") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const Graph& g : oracle::labelled_graphs(n)) {
      oracle::Reconfiguration r4(g, 4);
      for (const Colouring& a : r4.nodes()) {
        for (const Colouring& b : r4.nodes()) {
          const CposReduction r = reduce_4cp(g, a, b, Mode::Generalized, 5);
          const Decision d = decide_cpos(r.instance);
          CHECK(d.yes == r4.connected(a, b));
          if (d.path) CHECK(is_reconfig_walk(g, cpos_restrict_path(r, *d.path)));
        }
      }
    }
  }
}

TEST_CASE("succinct reduction layout") {
  const SuccinctLayout two = succinct_layout(2);
  CHECK(two.p == 2);
  CHECK(two.universal == 0);
  CHECK(two.catalog_members == 2);
  CHECK(two.used == 6);
  CHECK(two.total == 6);
  const SuccinctLayout three = succinct_layout(3);
  CHECK(three.used == 7);
  CHECK(three.catalog_coordinate(1, 1) == 3 + 2 + 1 + 1);
  CHECK_THROWS_AS(succinct_layout(0), ParameterError);

  CircuitBuilder b(2);
  const ScosInstance out = reduce_succinct(b.build(b.constant(false)));
  CHECK(out.circuit.variable_count() == 12);
}

TEST_CASE("succinct reduction agrees with the explicit construction") {
  std::mt19937_64 rng(41);
  for (unsigned m : {2u, 3u}) {
    const SuccinctLayout layout = succinct_layout(m);
    const auto catalog = enumerate_graphs(layout.p).members;
    for (int trial = 0; trial < 4; ++trial) {
      const Circuit in = trial == 0 ? encode_longhand(Graph::complete(m)) : oracle::random_circuit(rng, m, 8);
      const ScosInstance out = reduce_succinct(in);
      REQUIRE(out.circuit.variable_count() == 6 * m);
      const Graph input = materialize(in);
      for (std::uint64_t u = 0; u < (1u << (3 * m)); ++u)
        for (std::uint64_t v = 0; v < (1u << (3 * m)); ++v)
          CHECK(oracle::circuit_adjacent(out.circuit, u, v) ==
                oracle::succinct_output_adjacent(input, m, layout.universal, layout.catalog_offset, layout.p, catalog,
                                                 u, v));
    }
  }
}

TEST_CASE("exists-forall predicate") {
  const Graph k5 = Graph::complete(5);
  const std::vector<Vertex> none;
  CHECK(sigma2_verify(Graph::cycle(4), 2, Colouring(2, {1, 2, 1, 2}), none));
  const std::vector<Vertex> pair{0, 1};
  CHECK(sigma2_verify(k5, 2, Graph(2), pair));
  // P3 listed middle vertex first.
  const Graph p3_mid_first(3, {{0, 1}, {0, 2}});
  const std::vector<Vertex> copy{1, 0, 2};
  CHECK_FALSE(sigma2_verify(Graph::cycle(4), 3, p3_mid_first, copy));
  const std::vector<Vertex> repeated{1, 1, 2};
  CHECK(sigma2_verify(Graph::cycle(4), 3, p3_mid_first, repeated));
  CHECK_THROWS_AS(sigma2_verify(k5, 2, Graph(3), std::vector<Vertex>{0, 1, 2}), DomainError);
  CHECK_THROWS_AS(sigma2_verify(k5, 2, Colouring(3, {1, 2, 3, 1, 2}), none), DomainError);
}

TEST_CASE("exists-forall decision matches the direct decision") {
  CHECK(sigma2_decide(Graph::complete(5), 2));
  CHECK_FALSE(sigma2_decide(no_instance_p3(), 3));
  CHECK(sigma2_decide(Graph(1), 1));
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Graph& g : oracle::labelled_graphs(n))
      for (int p = 1; p <= 3; ++p) CHECK(sigma2_decide(g, p) == decide_cos(CosInstance::generalized(g, p)).yes);
}

TEST_CASE("hereditary fast path") {
  const Graph k2 = Graph::complete(2);
  const FastDecision big = hereditary_fast_decide(CosInstance::generalized(Graph(20), 3), k2);
  CHECK(big.yes);
  CHECK_FALSE(big.delegated);
  const FastDecision small = hereditary_fast_decide(CosInstance::generalized(Graph(10), 2), k2);
  CHECK(small.yes);
  CHECK(small.delegated);
  FastOptions check;
  check.verify_promise = true;
  const FastDecision k20 = hereditary_fast_decide(CosInstance::generalized(Graph::complete(20), 3), Graph(2), check);
  CHECK(k20.yes);
  CHECK(k20.promise_holds == true);
  const FastDecision broken = hereditary_fast_decide(CosInstance::generalized(Graph::cycle(20), 3), k2, check);
  CHECK(broken.promise_holds == false);
}
