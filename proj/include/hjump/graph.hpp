#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hjump {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbour lists are kept sorted, so
/// `has_edge` is a binary search and `edges()` is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n);

  /// Graph on `n` vertices with the given edges. Endpoint order does not
  /// matter and repeated edges collapse. Self-loops and endpoints >= n throw
  /// DomainError.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Injective map from the vertices of a source graph into a target graph.
/// `image[i]` is where source vertex i landed.
struct VertexMap {
  std::string source;
  std::string target;
  std::vector<Vertex> image;

  std::size_t size() const noexcept { return image.size(); }
  Vertex operator[](Vertex v) const { return image.at(v); }
  bool is_injective() const;
};

/// Disjoint union of `parts` in order; part i occupies a contiguous block.
std::pair<Graph, std::vector<VertexMap>> disjoint_union(std::span<const Graph> parts);

/// Adds `t` new vertices forming a clique, each adjacent to every original
/// vertex. The new vertices are n..n+t-1.
std::pair<Graph, std::vector<Vertex>> add_universal_clique(const Graph& g, std::size_t t);

Graph add_isolated(const Graph& g, std::size_t t);
Graph complement(const Graph& g);

/// Brute-force isomorphism test with degree pruning.
bool are_isomorphic(const Graph& g, const Graph& h);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Subgraph induced by `vertices` (relabelled 0..k-1 in the given order) and
/// the map back into `g`.
std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace hjump
