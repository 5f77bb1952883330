#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hjump/graph.hpp"

namespace hjump {

using Colour = std::uint16_t;

/// Total map from vertices 0..n-1 into {1..k}. Properness is checked
/// separately by `is_proper`.
class Colouring {
 public:
  Colouring() = default;

  /// Throws DomainError if k < 1 or some colour lies outside 1..k.
  Colouring(int k, std::vector<Colour> colours);

  /// Every vertex coloured 1.
  static Colouring uniform(int k, std::size_t n) { return Colouring(k, std::vector<Colour>(n, 1)); }

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return colours_.size(); }
  Colour operator[](Vertex v) const { return colours_.at(v); }
  std::span<const Colour> colours() const noexcept { return colours_; }

  /// Copy with vertex v recoloured.
  Colouring with(Vertex v, Colour c) const;
  /// Same assignment read as a colouring with a different palette size.
  Colouring with_palette(int k) const { return Colouring(k, colours_); }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  int k_ = 1;
  std::vector<Colour> colours_;
};

/// True iff every edge of g is bichromatic. Throws DomainError when the
/// colouring does not cover exactly V(g).
bool is_proper(const Graph& g, const Colouring& c);

/// A proper k-colouring of g if one exists.
///
/// Exact backtracking per connected component. The next vertex is the one
/// with the fewest remaining colours (ties: higher degree, then lower index),
/// colours are tried in increasing order and a vertex may open at most one
/// new colour, so the first vertex of each component is always coloured 1.
std::optional<Colouring> find_k_colouring(const Graph& g, int k);

/// ⌈√(log₂ n)⌉ in exact integer arithmetic: the least p with 2^(p²) >= n.
/// Throws ParameterError for n < 2.
int param_p(std::uint64_t n);

/// Smallest L with 2^L >= n, for n >= 1.
int ceil_log2(std::uint64_t n);

}  // namespace hjump
