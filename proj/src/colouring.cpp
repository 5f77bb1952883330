#include "hjump/colouring.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hjump/error.hpp"

namespace hjump {

Colouring::Colouring(int k, std::vector<Colour> colours) : k_(k), colours_(std::move(colours)) {
  if (k < 1) throw DomainError("palette size k must be at least 1");
  for (std::size_t v = 0; v < colours_.size(); ++v) {
    if (colours_[v] < 1 || colours_[v] > k) {
      throw DomainError("colour " + std::to_string(colours_[v]) + " of vertex " + std::to_string(v) +
                        " is outside 1.." + std::to_string(k));
    }
  }
}

Colouring Colouring::with(Vertex v, Colour c) const {
  auto colours = colours_;
  colours.at(v) = c;
  return Colouring(k_, std::move(colours));
}

bool is_proper(const Graph& g, const Colouring& c) {
  if (c.size() != g.vertex_count()) {
    throw DomainError("domain error: colouring covers " + std::to_string(c.size()) + " vertices, graph has " +
                      std::to_string(g.vertex_count()));
  }
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

namespace {

class ComponentSolver {
 public:
  ComponentSolver(const Graph& g, int k) : g_(g), k_(k) {}

  bool solve() {
    const std::size_t n = g_.vertex_count();
    colour_.assign(n, 0);
    forbidden_.assign(n * static_cast<std::size_t>(k_ + 1), 0);
    saturation_.assign(n, 0);
    return search(0, 0);
  }

  std::vector<Colour> colours() const { return colour_; }

 private:
  std::uint32_t& blocked(Vertex v, int c) { return forbidden_[v * static_cast<std::size_t>(k_ + 1) + c]; }

  Vertex pick() const {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (colour_[v]) continue;
      if (!found || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
        found = true;
      }
    }
    return best;
  }

  void assign(Vertex v, int c) {
    colour_[v] = static_cast<Colour>(c);
    for (Vertex w : g_.neighbours(v))
      if (blocked(w, c)++ == 0) ++saturation_[w];
  }

  void unassign(Vertex v) {
    const int c = colour_[v];
    colour_[v] = 0;
    for (Vertex w : g_.neighbours(v))
      if (--blocked(w, c) == 0) --saturation_[w];
  }

  bool search(std::size_t coloured, int max_used) {
    if (coloured == g_.vertex_count()) return true;
    const Vertex v = pick();
    if (saturation_[v] >= static_cast<std::uint32_t>(k_)) return false;
    const int limit = std::min(k_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (blocked(v, c)) continue;
      assign(v, c);
      if (search(coloured + 1, std::max(max_used, c))) return true;
      unassign(v);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Colour> colour_;
  std::vector<std::uint32_t> forbidden_;
  std::vector<std::uint32_t> saturation_;
};

}  // namespace

std::optional<Colouring> find_k_colouring(const Graph& g, int k) {
  if (k < 1) throw DomainError("palette size k must be at least 1");
  std::vector<Colour> result(g.vertex_count(), 1);
  for (const auto& component : connected_components(g)) {
    if (component.size() == 1) continue;
    auto [sub, map] = induced_subgraph(g, component);
    // A component never needs more colours than it has vertices.
    ComponentSolver solver(sub, std::min<int>(k, static_cast<int>(component.size())));
    if (!solver.solve()) return std::nullopt;
    const auto colours = solver.colours();
    for (std::size_t i = 0; i < component.size(); ++i) result[map.image[i]] = colours[i];
  }
  return Colouring(k, std::move(result));
}

int ceil_log2(std::uint64_t n) {
  if (n == 0) throw ParameterError("log of zero");
  return n == 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

int param_p(std::uint64_t n) {
  if (n < 2) throw ParameterError("parameter undefined: ceil(sqrt(log2 n)) needs n >= 2, got n = " + std::to_string(n));
  // p² >= log₂ n  <=>  p² >= ⌈log₂ n⌉ because p² is an integer.
  const int bound = ceil_log2(n);
  int p = 0;
  while (p * p < bound) ++p;
  return p;
}

}  // namespace hjump
