#include "hjump/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hjump/error.hpp"

namespace hjump {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
#ifdef HJUMP_CHECK_INVARIANTS
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (v == u || !std::binary_search(adjacency_[v].begin(), adjacency_[v].end(), u)) {
        throw std::logic_error("graph invariant violated at vertex " + std::to_string(u));
      }
    }
  }
#endif
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) throw DomainError("vertex out of range");
  const auto& a = adjacency_[u];
  const auto& b = adjacency_[v];
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) out[v] = adjacency_[v].size();
  return out;
}

bool VertexMap::is_injective() const {
  std::vector<Vertex> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::pair<Graph, std::vector<VertexMap>> disjoint_union(std::span<const Graph> parts) {
  std::size_t total = 0;
  for (const auto& part : parts) total += part.vertex_count();

  std::vector<Edge> edges;
  std::vector<VertexMap> maps;
  maps.reserve(parts.size());
  Vertex offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph& part = parts[i];
    VertexMap map{"part" + std::to_string(i), "union", {}};
    map.image.resize(part.vertex_count());
    std::iota(map.image.begin(), map.image.end(), offset);
    for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
    offset += static_cast<Vertex>(part.vertex_count());
    maps.push_back(std::move(map));
  }
  return {Graph(total, edges), std::move(maps)};
}

std::pair<Graph, std::vector<Vertex>> add_universal_clique(const Graph& g, std::size_t t) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  std::vector<Vertex> added(t);
  std::iota(added.begin(), added.end(), static_cast<Vertex>(n));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) edges.emplace_back(added[i], added[j]);
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, added[i]);
  }
  return {Graph(n + t, edges), std::move(added)};
}

Graph add_isolated(const Graph& g, std::size_t t) {
  auto edges = g.edges();
  return Graph(g.vertex_count() + t, edges);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbours(u);
    auto it = nb.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (it == nb.end() || *it != v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<Vertex> order;        // g-vertices in search order
  std::vector<Vertex> image;        // g -> h
  std::vector<char> used;           // h vertices taken
  std::vector<char> placed;         // g vertices mapped

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex u = order[depth];
    for (Vertex w = 0; w < h.vertex_count(); ++w) {
      if (used[w] || h.degree(w) != g.degree(u)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex prev = order[i];
        ok = g.has_edge(u, prev) == h.has_edge(w, image[prev]);
      }
      if (!ok) continue;
      image[u] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degree_sequence();
  auto dh = h.degree_sequence();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;

  const std::size_t n = g.vertex_count();
  IsoSearch search{g, h, {}, std::vector<Vertex>(n), std::vector<char>(n), std::vector<char>(n)};
  // Highest degree first, then grow along edges so adjacency checks prune early.
  search.order.reserve(n);
  while (search.order.size() < n) {
    Vertex best = 0;
    long best_score = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (search.placed[v]) continue;
      long links = 0;
      for (Vertex w : g.neighbours(v)) links += search.placed[w];
      const long score = links * static_cast<long>(n + 1) + static_cast<long>(g.degree(v));
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    search.placed[best] = 1;
    search.order.push_back(best);
  }
  return search.extend(0);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> component;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> position(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.vertex_count()) throw DomainError("vertex out of range");
    if (position[vertices[i]] >= 0) throw DomainError("repeated vertex in induced subgraph");
    position[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbours(vertices[i])) {
      const auto j = position[w];
      if (j > static_cast<std::int64_t>(i)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  VertexMap map{"induced", "graph", std::vector<Vertex>(vertices.begin(), vertices.end())};
  return {Graph(vertices.size(), edges), std::move(map)};
}

}  // namespace hjump
