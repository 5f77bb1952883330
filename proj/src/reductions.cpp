#include <algorithm>
#include <numeric>
#include <string>

#include "hjump/error.hpp"
#include "hjump/problems.hpp"

namespace hjump {

template <class Instance>
bool partitions_vertices(const ReductionArtifact<Instance>& artifact) {
  const std::size_t n = artifact.output_graph().vertex_count();
  std::vector<char> hit(n, 0);
  auto cover = [&](std::span<const Vertex> block) {
    for (Vertex v : block) {
      if (v >= n || hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  };
  if (!cover(artifact.graph_map.image) || !cover(artifact.clique_k) || !cover(artifact.clique_l) ||
      !cover(artifact.padding)) {
    return false;
  }
  for (const auto& map : artifact.catalog_maps)
    if (!cover(map.image)) return false;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

template bool partitions_vertices(const ReductionArtifact<CosInstance>&);
template bool partitions_vertices(const ReductionArtifact<CposInstance>&);

namespace {

struct Layout {
  Graph graph;
  VertexMap graph_map;
  std::vector<Vertex> clique_k;
  std::vector<Vertex> clique_l;
  std::vector<VertexMap> catalog_maps;
  std::vector<Vertex> padding;
};

std::vector<Vertex> block(Vertex first, std::size_t count) {
  std::vector<Vertex> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

int choose_p(const Graph& g, Mode mode, std::optional<int> p, int minimum) {
  const std::size_t n = g.vertex_count();
  if (mode == Mode::Generalized) {
    if (!p) throw ParameterError("generalized mode needs an explicit p");
    if (*p < minimum) {
      throw ParameterError("p = " + std::to_string(*p) + " is below the reduction's minimum " + std::to_string(minimum));
    }
    return *p;
  }
  if (n == 0) throw ParameterError("faithful mode needs a non-empty graph");
  const int derived = param_p(3 * static_cast<std::uint64_t>(n));
  if (p && *p != derived) {
    throw ParameterError("faithful mode derives p = ceil(sqrt(log2 3n)) = " + std::to_string(derived) +
                         ", but p = " + std::to_string(*p) + " was requested");
  }
  if (derived < minimum) {
    throw ParameterError("faithful mode: p = ceil(sqrt(log2 3n)) = " + std::to_string(derived) + " < " +
                         std::to_string(minimum) + " for n = " + std::to_string(n));
  }
  return derived;
}

// G* (already built, G on vertices 0..n-1) followed by the catalog and, in
// faithful mode, padding up to 3n.
Layout assemble(const Graph& star, std::size_t n, std::size_t gadget, int p, Mode mode, int cap) {
  const GraphCatalog& catalog = enumerate_graphs(p, cap);
  const std::size_t catalog_vertices = catalog.total_vertices();
  const std::size_t built = star.vertex_count() + catalog_vertices;
  if (mode == Mode::Faithful) {
    if (catalog_vertices > n) {
      throw ConstructionError("construction exceeds 3n: catalog vertex bound p*r <= n fails (" +
                              std::to_string(catalog_vertices) + " > " + std::to_string(n) + ")");
    }
    if (built > 3 * n) {
      throw ConstructionError("construction exceeds 3n: |V(G')| = " + std::to_string(built) + " > 3n = " +
                              std::to_string(3 * n));
    }
  }

  std::vector<Graph> parts{star};
  parts.insert(parts.end(), catalog.members.begin(), catalog.members.end());
  auto [joined, maps] = disjoint_union(parts);

  Layout layout;
  layout.graph_map = VertexMap{"G", "G'", block(0, n)};
  layout.clique_k = block(static_cast<Vertex>(n), gadget);
  for (std::size_t i = 1; i < maps.size(); ++i) {
    maps[i].source = "H" + std::to_string(i);
    maps[i].target = "G'";
    layout.catalog_maps.push_back(std::move(maps[i]));
  }
  const std::size_t pad = mode == Mode::Faithful ? 3 * n - built : 0;
  layout.padding = block(static_cast<Vertex>(built), pad);
  layout.graph = add_isolated(joined, pad);
  return layout;
}

void require_proper(const Graph& g, const Colouring& c, int max_colour, const char* what) {
  if (c.size() != g.vertex_count()) throw DomainError(std::string("domain error: ") + what + " has the wrong length");
  for (Colour x : c.colours())
    if (x > max_colour) {
      throw DomainError(std::string(what) + " uses colour " + std::to_string(x) + " > " + std::to_string(max_colour));
    }
  if (!is_proper(g, c)) throw ImproperColouring(std::string("improper colouring: ") + what);
}

// Colours every catalog member rainbow (vertex q gets q+1), padding 1.
std::vector<Colour> base_colours(std::size_t n, const std::vector<VertexMap>& catalog_maps,
                                 const std::vector<Vertex>& padding) {
  std::vector<Colour> colours(n, 1);
  for (const auto& map : catalog_maps)
    for (std::size_t q = 0; q < map.size(); ++q) colours[map.image[q]] = static_cast<Colour>(q + 1);
  for (Vertex v : padding) colours[v] = 1;
  return colours;
}

}  // namespace

CosReduction reduce_3col(const Graph& g, Mode mode, std::optional<int> p_override, int cap) {
  const int p = choose_p(g, mode, p_override, 4);
  const std::size_t n = g.vertex_count();
  auto [star, added] = add_universal_clique(g, static_cast<std::size_t>(p - 3));
  Layout layout = assemble(star, n, added.size(), p, mode, cap);

  CosReduction artifact;
  artifact.instance = CosInstance{std::move(layout.graph), p, mode};
  artifact.graph_map = std::move(layout.graph_map);
  artifact.clique_k = std::move(layout.clique_k);
  artifact.catalog_maps = std::move(layout.catalog_maps);
  artifact.padding = std::move(layout.padding);
  artifact.p = p;
  artifact.mode = mode;
  return artifact;
}

Colouring cos_forward_colouring(const CosReduction& artifact, const Colouring& three_colouring) {
  const Graph& out = artifact.output_graph();
  const Graph g = induced_subgraph(out, artifact.graph_map.image).first;
  require_proper(g, three_colouring, 3, "3-colouring of G");

  std::vector<Colour> colours = base_colours(out.vertex_count(), artifact.catalog_maps, artifact.padding);
  for (Vertex v = 0; v < g.vertex_count(); ++v) colours[artifact.graph_map[v]] = three_colouring[v];
  for (std::size_t j = 0; j < artifact.clique_k.size(); ++j) colours[artifact.clique_k[j]] = static_cast<Colour>(4 + j);
  Colouring result(artifact.p, std::move(colours));
  if (!is_proper(out, result)) throw ImproperColouring("improper colouring: forward colouring failed validation");
  return result;
}

Colouring cos_backward_colouring(const CosReduction& artifact, const Colouring& p_colouring) {
  const Graph& out = artifact.output_graph();
  const int p = artifact.p;
  require_proper(out, p_colouring, p, "p-colouring of G'");

  // The universal clique is rainbow; send its colours to 4..p and the rest,
  // in increasing order, to 1..3.
  std::vector<Colour> to(static_cast<std::size_t>(p) + 1, 0);
  for (std::size_t j = 0; j < artifact.clique_k.size(); ++j)
    to[p_colouring[artifact.clique_k[j]]] = static_cast<Colour>(4 + j);
  Colour next = 1;
  for (int c = 1; c <= p; ++c)
    if (!to[c]) to[c] = next++;

  const std::size_t n = artifact.graph_map.size();
  std::vector<Colour> colours(n);
  for (Vertex v = 0; v < n; ++v) colours[v] = to[p_colouring[artifact.graph_map[v]]];
  return Colouring(3, std::move(colours));
}

CposReduction reduce_4cp(const Graph& g, const Colouring& alpha, const Colouring& beta, Mode mode,
                         std::optional<int> p_override, int cap) {
  require_proper(g, alpha, 4, "alpha");
  require_proper(g, beta, 4, "beta");
  const int p = choose_p(g, mode, p_override, 5);
  const std::size_t n = g.vertex_count();
  const std::size_t k_size = static_cast<std::size_t>(p - 4);

  // G on 0..n-1, K = x₁..x_{p-4} next, then L = y₁..y₄.
  std::vector<Edge> edges = g.edges();
  const auto k_first = static_cast<Vertex>(n);
  const auto l_first = static_cast<Vertex>(n + k_size);
  for (Vertex x = k_first; x < l_first; ++x) {
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, x);
    for (Vertex y = x + 1; y < l_first + 4; ++y) edges.emplace_back(x, y);  // rest of K, and all of L
  }
  for (Vertex y = l_first; y < l_first + 4; ++y)
    for (Vertex z = y + 1; z < l_first + 4; ++z) edges.emplace_back(y, z);
  const Graph star(n + k_size + 4, edges);

  Layout layout = assemble(star, n, k_size, p, mode, cap);
  layout.clique_l = block(l_first, 4);

  std::vector<Colour> fixed = base_colours(layout.graph.vertex_count(), layout.catalog_maps, layout.padding);
  for (std::size_t h = 0; h < 4; ++h) fixed[layout.clique_l[h]] = static_cast<Colour>(h + 1);
  for (std::size_t i = 0; i < k_size; ++i) fixed[layout.clique_k[i]] = static_cast<Colour>(i + 5);
  std::vector<Colour> a = fixed, b = fixed;
  for (Vertex v = 0; v < n; ++v) {
    a[v] = alpha[v];
    b[v] = beta[v];
  }

  CposReduction artifact;
  artifact.instance = CposInstance{std::move(layout.graph), Colouring(p, std::move(a)), Colouring(p, std::move(b)),
                                   p, mode};
  artifact.graph_map = std::move(layout.graph_map);
  artifact.clique_k = std::move(layout.clique_k);
  artifact.clique_l = std::move(layout.clique_l);
  artifact.catalog_maps = std::move(layout.catalog_maps);
  artifact.padding = std::move(layout.padding);
  artifact.p = p;
  artifact.mode = mode;
  if (!is_proper(artifact.output_graph(), artifact.instance.alpha) ||
      !is_proper(artifact.output_graph(), artifact.instance.beta)) {
    throw ImproperColouring("improper colouring: constructed endpoint colourings failed validation");
  }
  return artifact;
}

namespace {

// G is the induced subgraph on the first graph_map.size() vertices of G′.
Graph original_graph(const CposReduction& artifact) {
  return induced_subgraph(artifact.output_graph(), artifact.graph_map.image).first;
}

}  // namespace

ReconfigPath cpos_lift_path(const CposReduction& artifact, const ReconfigPath& path) {
  const Graph g = original_graph(artifact);
  ReconfigPath checked{4, path.steps};
  if (auto defect = walk_defect(g, checked); !defect.empty()) throw InvalidPath("invalid path in R_4(G): " + defect);

  ReconfigPath lifted{artifact.p, {}};
  lifted.steps.reserve(path.size());
  const auto base = artifact.instance.alpha.colours();
  for (const Colouring& step : path.steps) {
    std::vector<Colour> colours(base.begin(), base.end());
    for (Vertex v = 0; v < step.size(); ++v) colours[artifact.graph_map[v]] = step[v];
    lifted.steps.emplace_back(artifact.p, std::move(colours));
  }
  return lifted;
}

ReconfigPath cpos_restrict_path(const CposReduction& artifact, const ReconfigPath& path) {
  const Graph& out = artifact.output_graph();
  ReconfigPath checked{artifact.p, path.steps};
  if (auto defect = walk_defect(out, checked); !defect.empty()) throw InvalidPath("invalid path in R_p(G'): " + defect);

  ReconfigPath restricted{4, {}};
  if (path.empty()) return restricted;

  // K ∪ L is a p-clique, so it is frozen along the whole walk. Send K's
  // colours to 5..p and the four colours left for G to 1..4.
  const Colouring& first = path.steps.front();
  std::vector<Colour> to(static_cast<std::size_t>(artifact.p) + 1, 0);
  for (std::size_t i = 0; i < artifact.clique_k.size(); ++i)
    to[first[artifact.clique_k[i]]] = static_cast<Colour>(i + 5);
  Colour next = 1;
  for (int c = 1; c <= artifact.p; ++c)
    if (!to[c]) to[c] = next++;

  const std::size_t n = artifact.graph_map.size();
  for (const Colouring& step : path.steps) {
    std::vector<Colour> colours(n);
    for (Vertex v = 0; v < n; ++v) colours[v] = to[step[artifact.graph_map[v]]];
    Colouring mapped(4, std::move(colours));
    if (restricted.steps.empty() || !(restricted.steps.back() == mapped)) restricted.steps.push_back(std::move(mapped));
  }
  return restricted;
}

SuccinctLayout succinct_layout(unsigned m, int cap) {
  if (m == 0) throw ParameterError("m must be at least 1");
  SuccinctLayout layout;
  layout.m = m;
  layout.total = 3 * m;
  layout.p = param_p(3 * static_cast<std::uint64_t>(m));
  layout.universal = layout.p > 3 ? static_cast<unsigned>(layout.p - 3) : 0;
  layout.catalog_offset = m + layout.universal;
  layout.catalog_members = enumerate_graphs(layout.p, cap).size();
  const std::uint64_t needed =
      layout.catalog_offset + static_cast<std::uint64_t>(layout.catalog_members) * static_cast<unsigned>(layout.p);
  if (needed > layout.total) {
    throw ConstructionError("variable budget violated: m + (p-3) + r*p <= 3m fails for m = " + std::to_string(m) +
                            ", p = " + std::to_string(layout.p) + " (" + std::to_string(needed) + " > " +
                            std::to_string(layout.total) + ")");
  }
  layout.used = static_cast<unsigned>(needed);
  return layout;
}

ScosInstance reduce_succinct(const Circuit& circuit, int cap) {
  const unsigned m = circuit.m();
  const SuccinctLayout layout = succinct_layout(m, cap);
  const unsigned wide = layout.total;

  // Old vertices keep their codes with a zero suffix; the universal clique
  // is then attached to all of them.
  const Circuit widened = expand_add_vertices(circuit, wide - m);
  const Circuit with_clique = add_universal_adjacency_disjuncts(widened, m, layout.universal);

  CircuitBuilder b(wide);
  std::vector<NodeId> disjuncts{b.import(with_clique, [](unsigned i) { return i; })};
  auto one_hot = [&](unsigned base, unsigned coordinate, std::vector<NodeId>& literals) {
    literals.push_back(b.var(base + coordinate));
    for (unsigned l = 1; l <= wide; ++l)
      if (l != coordinate) literals.push_back(b.negate(b.var(base + l)));
  };
  const GraphCatalog& catalog = enumerate_graphs(layout.p, cap);
  for (std::size_t h = 0; h < catalog.size(); ++h) {
    const Graph& member = catalog.members[h];
    for (Vertex i = 0; i < member.vertex_count(); ++i) {
      for (Vertex j : member.neighbours(i)) {
        std::vector<NodeId> literals;
        one_hot(0, layout.catalog_coordinate(h, i), literals);
        one_hot(wide, layout.catalog_coordinate(h, j), literals);
        disjuncts.push_back(b.conjunction(std::move(literals)));
      }
    }
  }
  return ScosInstance{b.build(b.disjunction(std::move(disjuncts)))};
}

}  // namespace hjump
