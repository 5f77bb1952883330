#include "hjump/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>

#include "hjump/error.hpp"

namespace hjump {

namespace {

constexpr std::size_t kMaxCodeVertices = 11;  // 55 pair bits

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0)) / 2; }

// Column-order index of the pair (i, j), i < j.
std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

struct CanonicalSearch {
  std::size_t n;
  std::array<std::uint16_t, kMaxCodeVertices> rows{};  // adjacency bitmasks
  std::array<std::uint8_t, kMaxCodeVertices> order{};
  std::uint16_t used = 0;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;
  std::size_t total_bits = 0;

  void run(std::size_t depth, std::uint64_t prefix, std::size_t bits) {
    if (depth == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    for (std::uint8_t v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      std::uint64_t next = prefix;
      for (std::size_t i = 0; i < depth; ++i) next = (next << 1) | ((rows[v] >> order[i]) & 1u);
      const std::size_t next_bits = bits + depth;
      if (have_best && next > (best >> (total_bits - next_bits))) continue;
      order[depth] = v;
      used |= static_cast<std::uint16_t>(1u << v);
      run(depth + 1, next, next_bits);
      used &= static_cast<std::uint16_t>(~(1u << v));
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCodeVertices) throw CapExceeded("canonical codes support at most 11 vertices");
  CanonicalSearch search{.n = n, .total_bits = pair_count(n)};
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbours(v)) search.rows[v] |= static_cast<std::uint16_t>(1u << w);
  search.run(0, 0, 0);
  return search.have_best ? search.best : 0;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  if (n > kMaxCodeVertices) throw CapExceeded("canonical codes support at most 11 vertices");
  const std::size_t bits = pair_count(n);
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((code >> (bits - 1 - pair_index(i, j))) & 1u)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, edges);
}

long GraphCatalog::index_of(const Graph& g) const {
  if (g.vertex_count() != static_cast<std::size_t>(p)) return -1;
  const auto code = canonical_code(g);
  auto it = std::lower_bound(codes.begin(), codes.end(), code);
  if (it == codes.end() || *it != code) return -1;
  return static_cast<long>(it - codes.begin());
}

namespace {

GraphCatalog build_catalog(int p, const GraphCatalog* smaller) {
  GraphCatalog catalog;
  catalog.p = p;
  if (p == 1) {
    catalog.codes = {0};
  } else {
    // Every p-vertex graph is some (p-1)-vertex class plus one vertex joined
    // to a subset of it.
    std::set<std::uint64_t> seen;
    const std::size_t q = static_cast<std::size_t>(p - 1);
    for (const Graph& base : smaller->members) {
      const auto base_edges = base.edges();
      for (std::uint32_t subset = 0; subset < (1u << q); ++subset) {
        std::vector<Edge> edges = base_edges;
        for (Vertex v = 0; v < q; ++v)
          if (subset & (1u << v)) edges.emplace_back(v, static_cast<Vertex>(q));
        seen.insert(canonical_code(Graph(q + 1, edges)));
      }
    }
    catalog.codes.assign(seen.begin(), seen.end());
  }
  catalog.members.reserve(catalog.codes.size());
  for (auto code : catalog.codes) catalog.members.push_back(graph_from_code(static_cast<std::size_t>(p), code));
  return catalog;
}

}  // namespace

const GraphCatalog& enumerate_graphs(int p, int cap) {
  if (p < 1) throw ParameterError("catalog order p must be at least 1");
  if (p > cap) {
    throw CapExceeded("enumeration cap: p = " + std::to_string(p) + " exceeds cap " + std::to_string(cap));
  }
  if (static_cast<std::size_t>(p) > kMaxCodeVertices) {
    throw CapExceeded("enumeration cap: catalogs are limited to 11 vertices");
  }

  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GraphCatalog>> cache;
  std::lock_guard lock(mutex);
  for (int q = 1; q <= p; ++q) {
    if (cache.count(q)) continue;
    const GraphCatalog* smaller = q > 1 ? cache.at(q - 1).get() : nullptr;
    cache.emplace(q, std::make_unique<GraphCatalog>(build_catalog(q, smaller)));
  }
  return *cache.at(p);
}

}  // namespace hjump
