#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call the library's solvers; they only use Graph, Colouring and Circuit as
// containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hjump/circuit.hpp"
#include "hjump/colouring.hpp"
#include "hjump/graph.hpp"

namespace oracle {

using hjump::Circuit;
using hjump::Colour;
using hjump::Colouring;
using hjump::Edge;
using hjump::Gate;
using hjump::GateKind;
using hjump::Graph;
using hjump::Vertex;

inline bool proper(const Graph& g, const std::vector<Colour>& c) {
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v) && c[u] == c[v]) return false;
  return true;
}

// Calls f on every vector in {1..k}^n; stops early when f returns true.
inline bool each_assignment(std::size_t n, int k, const std::function<bool(const std::vector<Colour>&)>& f) {
  std::vector<Colour> c(n, 1);
  while (true) {
    if (f(c)) return true;
    std::size_t i = 0;
    while (i < n && c[i] == k) c[i++] = 1;
    if (i == n) return false;
    ++c[i];
  }
}

inline bool colourable(const Graph& g, int k) {
  return each_assignment(g.vertex_count(), k, [&](const std::vector<Colour>& c) { return proper(g, c); });
}

inline std::vector<Colouring> proper_colourings(const Graph& g, int k) {
  std::vector<Colouring> out;
  each_assignment(g.vertex_count(), k, [&](const std::vector<Colour>& c) {
    if (proper(g, c)) out.emplace_back(k, c);
    return false;
  });
  return out;
}

// Induced containment by trying every injective tuple of g's vertices.
inline bool contains(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = h.vertex_count();
  if (k > n) return false;
  std::vector<Vertex> tuple(k);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == k) {
      for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b)
          if (h.has_edge(a, b) != g.has_edge(tuple[a], tuple[b])) return false;
      return true;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple[i] = v;
      if (go(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return go(0);
}

inline std::vector<Graph> labelled_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1u) edges.push_back(pairs[b]);
    out.emplace_back(n, edges);
  }
  return out;
}

// Isomorphism by trying all n! relabellings.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (auto [u, v] : a.edges()) {
      if (!b.has_edge(perm[u], perm[v])) {
        same = false;
        break;
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// One representative per isomorphism class, by pairwise dedupe.
inline std::vector<Graph> iso_classes(std::size_t n) {
  std::vector<Graph> reps;
  for (const Graph& g : labelled_graphs(n)) {
    bool fresh = true;
    for (const Graph& r : reps) {
      if (isomorphic(g, r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(g);
  }
  return reps;
}

inline bool adjacent_in_reconfig(const Colouring& a, const Colouring& b) {
  std::size_t diff = 0;
  for (Vertex v = 0; v < a.size(); ++v) diff += a[v] != b[v];
  return diff == 1;
}

// Connected components of R_k(g), built explicitly and merged by union-find.
class Reconfiguration {
 public:
  Reconfiguration(const Graph& g, int k) : nodes_(proper_colourings(g, k)), parent_(nodes_.size()) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = i + 1; j < nodes_.size(); ++j)
        if (adjacent_in_reconfig(nodes_[i], nodes_[j])) parent_[find(i)] = find(j);
  }

  bool connected(const Colouring& a, const Colouring& b) { return find(index(a)) == find(index(b)); }

  std::vector<Colouring> component(const Colouring& a) {
    std::vector<Colouring> out;
    const std::size_t root = find(index(a));
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (find(i) == root) out.push_back(nodes_[i]);
    return out;
  }

  const std::vector<Colouring>& nodes() const { return nodes_; }

 private:
  std::size_t index(const Colouring& c) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (std::equal(nodes_[i].colours().begin(), nodes_[i].colours().end(), c.colours().begin(),
                     c.colours().end()))
        return i;
    throw std::logic_error("colouring is not a node of R_k");
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::vector<Colouring> nodes_;
  std::vector<std::size_t> parent_;
};

inline bool eval_node(const Circuit& c, hjump::NodeId id, const std::vector<std::uint8_t>& x) {
  const Gate& g = c.gate(id);
  switch (g.kind) {
    case GateKind::Const:
      return g.value != 0;
    case GateKind::Var:
      return x.at(g.value - 1) != 0;
    case GateKind::Not:
      return !eval_node(c, g.inputs.at(0), x);
    case GateKind::And:
      for (auto i : g.inputs)
        if (!eval_node(c, i, x)) return false;
      return true;
    case GateKind::Or:
      for (auto i : g.inputs)
        if (eval_node(c, i, x)) return true;
      return false;
  }
  return false;
}

// Recursive evaluation straight from the gate list.
inline bool eval(const Circuit& c, const std::vector<std::uint8_t>& x) { return eval_node(c, c.output(), x); }

// Bits of vertex index `index` in a code of `width`, coordinate 1 first.
inline std::vector<std::uint8_t> bits(std::uint64_t index, unsigned width) {
  std::vector<std::uint8_t> out(width);
  for (unsigned i = 0; i < width; ++i) out[i] = (index >> (width - 1 - i)) & 1u;
  return out;
}

inline bool circuit_adjacent(const Circuit& c, std::uint64_t u, std::uint64_t v) {
  if (u == v) return false;
  auto a = bits(u, c.m());
  auto b = bits(v, c.m());
  std::vector<std::uint8_t> uv(a);
  uv.insert(uv.end(), b.begin(), b.end());
  std::vector<std::uint8_t> vu(b);
  vu.insert(vu.end(), a.begin(), a.end());
  return eval(c, uv) || eval(c, vu);
}

// Index of the coordinate set in a one-hot code, or 0.
inline unsigned one_hot_coordinate(const std::vector<std::uint8_t>& code) {
  unsigned hot = 0;
  for (unsigned i = 0; i < code.size(); ++i) {
    if (!code[i]) continue;
    if (hot) return 0;
    hot = i + 1;
  }
  return hot;
}

// Adjacency of the succinct reduction's output written out code by code.
// `input` is the materialized input graph on 2^m vertices; coordinates
// m+1..m+t hold the universal clique and each catalog member h occupies p
// consecutive coordinates from `offset` + h·p + 1.
inline bool succinct_output_adjacent(const Graph& input, unsigned m, unsigned t, unsigned offset, int p,
                                     const std::vector<Graph>& catalog, std::uint64_t u, std::uint64_t v) {
  if (u == v) return false;
  const unsigned width = 3 * m;
  const auto a = bits(u, width);
  const auto b = bits(v, width);
  auto old = [&](const std::vector<std::uint8_t>& code) {
    return std::all_of(code.begin() + m, code.end(), [](std::uint8_t x) { return x == 0; });
  };
  auto prefix = [&](std::uint64_t index) { return static_cast<Vertex>(index >> (width - m)); };
  if (old(a) && old(b)) return input.has_edge(prefix(u), prefix(v));
  const unsigned ha = one_hot_coordinate(a);
  const unsigned hb = one_hot_coordinate(b);
  auto universal = [&](unsigned h) { return h > m && h <= m + t; };
  if (universal(ha) && (old(b) || universal(hb))) return true;
  if (universal(hb) && old(a)) return true;
  auto member = [&](unsigned h) { return h > offset && h <= offset + catalog.size() * p ? (h - offset - 1) / p : ~0u; };
  if (ha && hb && member(ha) != ~0u && member(ha) == member(hb)) {
    const unsigned h = member(ha);
    return catalog[h].has_edge((ha - offset - 1) % p, (hb - offset - 1) % p);
  }
  return false;
}

// Random circuit DAG over 2m variables: random gates reading earlier nodes.
inline Circuit random_circuit(std::mt19937_64& rng, unsigned m, std::size_t gates) {
  std::vector<Gate> list;
  std::uniform_int_distribution<unsigned> var(1, 2 * m);
  for (unsigned i = 1; i <= 2 * m; ++i) list.push_back({GateKind::Var, i, {}});
  list.push_back({GateKind::Const, 0, {}});
  list.push_back({GateKind::Const, 1, {}});
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> arity(0, 3);
  for (std::size_t i = 0; i < gates; ++i) {
    std::uniform_int_distribution<hjump::NodeId> pick(0, static_cast<hjump::NodeId>(list.size() - 1));
    const int k = kind(rng);
    if (k == 0) {
      list.push_back({GateKind::Not, 0, {pick(rng)}});
    } else {
      Gate g{k == 1 ? GateKind::And : GateKind::Or, 0, {}};
      const int a = arity(rng);
      for (int j = 0; j < a; ++j) g.inputs.push_back(pick(rng));
      list.push_back(std::move(g));
    }
  }
  const auto output = static_cast<hjump::NodeId>(list.size() - 1);
  return Circuit(m, std::move(list), output);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace oracle
