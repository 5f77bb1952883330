#pragma once

#include <cstdint>
#include <vector>

#include "hjump/graph.hpp"

namespace hjump {

inline constexpr int kDefaultEnumerationCap = 7;

/// Canonical code of a graph on at most 11 vertices: the lexicographically
/// smallest upper-triangle adjacency bitstring over all vertex orderings.
/// Pairs are read column by column, (0,1), (0,2), (1,2), (0,3), ..., and the
/// first pair is the most significant bit.
std::uint64_t canonical_code(const Graph& g);

/// Rebuilds the graph whose upper-triangle bitstring (same pair order) is
/// `code`.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// One representative per isomorphism class of graphs on exactly p vertices,
/// each in canonical labelling, sorted by canonical code.
struct GraphCatalog {
  int p = 0;
  std::vector<Graph> members;
  std::vector<std::uint64_t> codes;

  std::size_t size() const noexcept { return members.size(); }
  std::size_t total_vertices() const noexcept { return members.size() * static_cast<std::size_t>(p); }

  /// Index of the member isomorphic to `g`, or -1 when g has the wrong order.
  long index_of(const Graph& g) const;
};

/// Catalog of all graphs on p vertices. Results are cached per p and shared
/// between threads. Throws CapExceeded when p > cap and ParameterError when
/// p < 1.
const GraphCatalog& enumerate_graphs(int p, int cap = kDefaultEnumerationCap);

}  // namespace hjump
