#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hjump/circuit.hpp"
#include "hjump/graph.hpp"

namespace hjump {

inline constexpr unsigned kDefaultMaterializationCap = 18;

/// Vertex index of an m-bit code; bit 1 is the most significant.
std::uint64_t code_index(std::span<const std::uint8_t> bits);
/// Inverse of code_index for a code of `width` bits.
std::vector<std::uint8_t> code_bits(std::uint64_t index, unsigned width);

/// Edge test of the graph defined by φ: u ≠ v and (φ(u·v) or φ(v·u)).
bool adjacency(const Circuit& circuit, std::span<const std::uint8_t> u, std::span<const std::uint8_t> v);

/// Adjacency over vertex indices, reusing evaluation buffers.
class AdjacencyOracle {
 public:
  explicit AdjacencyOracle(const Circuit& circuit);
  bool operator()(std::uint64_t u, std::uint64_t v);

 private:
  bool directed(std::uint64_t u, std::uint64_t v);

  CircuitEvaluator evaluate_;
  unsigned m_;
  std::vector<std::uint8_t> assignment_;
};

/// The graph on 2^m vertices defined by φ. Throws CapExceeded when m > cap.
Graph materialize(const Circuit& circuit, unsigned cap = kDefaultMaterializationCap);

/// DNF over 2n variables with one disjunct per ordered edge (i, j):
///   x_i ∧ ¬x_l (l ≠ i) ∧ y_j ∧ ¬y_l (l ≠ j).
/// Vertex i of g sits on the one-hot code with x_{i+1} set; every other code
/// is isolated. Negated literals are shared between disjuncts.
Circuit encode_longhand(const Graph& g);

/// Widens φ from 2m to 2(m+k) variables. Codes whose last k coordinates are
/// zero keep their adjacency; every other code is isolated.
Circuit expand_add_vertices(const Circuit& circuit, unsigned k);

/// For a circuit already widened from `m` to φ.m() coordinates, makes the
/// first t new one-hot vertices pairwise adjacent and adjacent to every
/// original vertex (code with all new coordinates zero). Both directions are
/// emitted. Throws DomainError when t exceeds φ.m() - m.
Circuit add_universal_adjacency_disjuncts(const Circuit& circuit, unsigned m, unsigned t);

}  // namespace hjump
