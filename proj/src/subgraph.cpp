#include "hjump/subgraph.hpp"

#include <algorithm>

namespace hjump {

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {}

  std::optional<VertexMap> run() {
    const std::size_t k = h_.vertex_count();
    if (k > g_.vertex_count()) return std::nullopt;
    plan_order();
    image_.assign(k, 0);
    used_.assign(g_.vertex_count(), 0);
    if (!extend(0)) return std::nullopt;
    return VertexMap{"pattern", "host", image_};
  }

 private:
  // Pattern vertices in an order where each one (after the first of its
  // component) has an already placed neighbour, highest degree first.
  void plan_order() {
    const std::size_t k = h_.vertex_count();
    std::vector<char> placed(k, 0);
    anchor_.assign(k, -1);
    order_.clear();
    while (order_.size() < k) {
      long best = -1;
      long best_score = -1;
      for (Vertex v = 0; v < k; ++v) {
        if (placed[v]) continue;
        long links = 0;
        for (Vertex w : h_.neighbours(v)) links += placed[w];
        const long score = links * static_cast<long>(k + 1) + static_cast<long>(h_.degree(v));
        if (score > best_score) {
          best_score = score;
          best = v;
        }
      }
      const auto v = static_cast<Vertex>(best);
      for (Vertex w : h_.neighbours(v)) {
        if (placed[w]) {
          anchor_[v] = w;
          break;
        }
      }
      placed[v] = 1;
      order_.push_back(v);
    }
  }

  bool fits(Vertex u, Vertex x, std::size_t depth) const {
    if (used_[x]) return false;
    // An induced copy maps neighbours to neighbours and non-neighbours to
    // non-neighbours.
    const std::size_t hn = h_.vertex_count();
    const std::size_t gn = g_.vertex_count();
    if (g_.degree(x) < h_.degree(u)) return false;
    if (gn - 1 - g_.degree(x) < hn - 1 - h_.degree(u)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex prev = order_[i];
      if (h_.has_edge(u, prev) != g_.has_edge(x, image_[prev])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    auto attempt = [&](Vertex x) {
      if (!fits(u, x, depth)) return false;
      image_[u] = x;
      used_[x] = 1;
      if (extend(depth + 1)) return true;
      used_[x] = 0;
      return false;
    };
    if (anchor_[u] >= 0) {
      for (Vertex x : g_.neighbours(image_[static_cast<Vertex>(anchor_[u])]))
        if (attempt(x)) return true;
    } else {
      for (Vertex x = 0; x < g_.vertex_count(); ++x)
        if (attempt(x)) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::vector<long> anchor_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<VertexMap> contains_induced(const Graph& g, const Graph& h) {
  return EmbeddingSearch(g, h).run();
}

bool is_induced_embedding(const Graph& g, const Graph& h, const VertexMap& map) {
  if (map.size() != h.vertex_count() || !map.is_injective()) return false;
  for (Vertex v : map.image)
    if (v >= g.vertex_count()) return false;
  for (Vertex u = 0; u < h.vertex_count(); ++u)
    for (Vertex v = u + 1; v < h.vertex_count(); ++v)
      if (h.has_edge(u, v) != g.has_edge(map[u], map[v])) return false;
  return true;
}

std::optional<Graph> find_forbidden(const Graph& g, int p, int cap) {
  const GraphCatalog& catalog = enumerate_graphs(p, cap);
  for (const Graph& member : catalog.members)
    if (!contains_induced(g, member)) return member;
  return std::nullopt;
}

}  // namespace hjump
