#include "hjump/succinct.hpp"

#include <algorithm>
#include <string>

#include "hjump/error.hpp"

namespace hjump {

std::uint64_t code_index(std::span<const std::uint8_t> bits) {
  if (bits.size() > 63) throw DomainError("codes wider than 63 bits are not supported");
  std::uint64_t index = 0;
  for (std::uint8_t b : bits) index = (index << 1) | (b ? 1u : 0u);
  return index;
}

std::vector<std::uint8_t> code_bits(std::uint64_t index, unsigned width) {
  std::vector<std::uint8_t> bits(width);
  for (unsigned i = 0; i < width; ++i) bits[width - 1 - i] = static_cast<std::uint8_t>((index >> i) & 1u);
  return bits;
}

bool adjacency(const Circuit& circuit, std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
  const unsigned m = circuit.m();
  if (u.size() != m || v.size() != m) {
    throw DomainError("vertex codes must have " + std::to_string(m) + " bits");
  }
  if (std::equal(u.begin(), u.end(), v.begin())) return false;
  std::vector<std::uint8_t> assignment(u.begin(), u.end());
  assignment.insert(assignment.end(), v.begin(), v.end());
  CircuitEvaluator evaluate(circuit);
  if (evaluate(assignment)) return true;
  std::copy(v.begin(), v.end(), assignment.begin());
  std::copy(u.begin(), u.end(), assignment.begin() + m);
  return evaluate(assignment);
}

AdjacencyOracle::AdjacencyOracle(const Circuit& circuit)
    : evaluate_(circuit), m_(circuit.m()), assignment_(2 * circuit.m()) {}

bool AdjacencyOracle::directed(std::uint64_t u, std::uint64_t v) {
  for (unsigned i = 0; i < m_; ++i) {
    assignment_[m_ - 1 - i] = static_cast<std::uint8_t>((u >> i) & 1u);
    assignment_[2 * m_ - 1 - i] = static_cast<std::uint8_t>((v >> i) & 1u);
  }
  return evaluate_(assignment_);
}

bool AdjacencyOracle::operator()(std::uint64_t u, std::uint64_t v) {
  if (m_ < 64 && (u >> m_ || v >> m_)) throw DomainError("vertex index out of range");
  return u != v && (directed(u, v) || directed(v, u));
}

Graph materialize(const Circuit& circuit, unsigned cap) {
  const unsigned m = circuit.m();
  if (m > cap) {
    throw CapExceeded("materialization cap: m = " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  }
  const std::uint64_t n = std::uint64_t{1} << m;
  AdjacencyOracle adjacent(circuit);
  std::vector<Edge> edges;
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t v = u + 1; v < n; ++v)
      if (adjacent(u, v)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, edges);
}

namespace {

// Conjunction fixing one side's coordinates first..last (1-based, inclusive)
// to the one-hot pattern with `hot` set, or to all-zero when hot == 0.
// `base` is 0 for the x side and m for the y side.
void exact_block(CircuitBuilder& b, unsigned base, unsigned first, unsigned last, unsigned hot,
                 std::vector<NodeId>& literals) {
  if (hot) literals.push_back(b.var(base + hot));
  for (unsigned l = first; l <= last; ++l)
    if (l != hot) literals.push_back(b.negate(b.var(base + l)));
}

}  // namespace

Circuit encode_longhand(const Graph& g) {
  const auto n = static_cast<unsigned>(g.vertex_count());
  if (n == 0) throw DomainError("longhand encoding needs at least one vertex");
  CircuitBuilder b(n);
  std::vector<NodeId> disjuncts;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : g.neighbours(i)) {
      std::vector<NodeId> literals;
      exact_block(b, 0, 1, n, i + 1, literals);
      exact_block(b, n, 1, n, j + 1, literals);
      disjuncts.push_back(b.conjunction(std::move(literals)));
    }
  }
  return b.build(b.disjunction(std::move(disjuncts)));
}

Circuit expand_add_vertices(const Circuit& circuit, unsigned k) {
  if (k < 1) throw DomainError("expansion width k must be at least 1");
  const unsigned m = circuit.m();
  const unsigned wide = m + k;
  CircuitBuilder b(wide);
  std::vector<NodeId> parts;
  parts.push_back(b.import(circuit, [&](unsigned i) { return i <= m ? i : wide + (i - m); }));
  for (unsigned l = m + 1; l <= wide; ++l) parts.push_back(b.negate(b.var(l)));
  for (unsigned l = m + 1; l <= wide; ++l) parts.push_back(b.negate(b.var(wide + l)));
  return b.build(b.conjunction(std::move(parts)));
}

Circuit add_universal_adjacency_disjuncts(const Circuit& circuit, unsigned m, unsigned t) {
  const unsigned wide = circuit.m();
  if (m > wide || t > wide - m) {
    throw DomainError("t = " + std::to_string(t) + " exceeds the expansion width " +
                      std::to_string(wide >= m ? wide - m : 0));
  }
  if (t == 0) return circuit;

  CircuitBuilder b(wide);
  std::vector<NodeId> disjuncts{b.import(circuit, [](unsigned i) { return i; })};
  // Original vertex on one side: only the new coordinates are constrained.
  auto original = [&](unsigned base, std::vector<NodeId>& literals) {
    exact_block(b, base, m + 1, wide, 0, literals);
  };
  // The j-th new vertex: exactly coordinate m + j set, everything else zero.
  auto added = [&](unsigned base, unsigned j, std::vector<NodeId>& literals) {
    exact_block(b, base, 1, wide, m + j, literals);
  };
  for (unsigned j = 1; j <= t; ++j) {
    std::vector<NodeId> forward, backward;
    original(0, forward);
    added(wide, j, forward);
    added(0, j, backward);
    original(wide, backward);
    disjuncts.push_back(b.conjunction(std::move(forward)));
    disjuncts.push_back(b.conjunction(std::move(backward)));
  }
  for (unsigned i = 1; i <= t; ++i) {
    for (unsigned j = 1; j <= t; ++j) {
      if (i == j) continue;
      std::vector<NodeId> literals;
      added(0, i, literals);
      added(wide, j, literals);
      disjuncts.push_back(b.conjunction(std::move(literals)));
    }
  }
  return b.build(b.disjunction(std::move(disjuncts)));
}

}  // namespace hjump
