#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hjump/catalog.hpp"
#include "hjump/circuit.hpp"
#include "hjump/colouring.hpp"
#include "hjump/graph.hpp"
#include "hjump/reconfig.hpp"
#include "hjump/succinct.hpp"

namespace hjump {

/// Faithful instances bind p = ⌈√(log₂ n)⌉; generalized ones carry an
/// explicit p and skip padding.
enum class Mode { Faithful, Generalized };

std::string_view to_string(Mode mode);
/// Accepts "faithful" and "generalized"; throws DomainError otherwise.
Mode parse_mode(std::string_view text);

struct SolveOptions {
  int enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t node_budget = default_node_budget();
  unsigned materialization_cap = kDefaultMaterializationCap;
};

/// Colouring-or-Subgraph: is G p-colourable or H-free for some |V(H)| <= p?
struct CosInstance {
  Graph graph;
  int p = 1;
  Mode mode = Mode::Generalized;

  static CosInstance faithful(Graph g);
  static CosInstance generalized(Graph g, int p);
  /// Throws ParameterError when p < 1 or a faithful p disagrees with n.
  void validate() const;
};

/// Colour-Path-or-Subgraph: does R_p(G) join α and β, or is G H-free for
/// some |V(H)| <= p?
struct CposInstance {
  Graph graph;
  Colouring alpha;
  Colouring beta;
  int p = 1;
  Mode mode = Mode::Generalized;

  static CposInstance faithful(Graph g, Colouring alpha, Colouring beta);
  static CposInstance generalized(Graph g, Colouring alpha, Colouring beta, int p);
  /// Also checks that α and β are proper p-colourings.
  void validate() const;
};

/// Succinct Colouring-or-Subgraph over the graph on 2^m vertices defined by
/// a circuit; the parameter is ⌈√(log₂ m)⌉.
struct ScosInstance {
  Circuit circuit;

  int p() const;
};

/// Verdict plus whichever witness settled it.
struct Decision {
  bool yes = false;
  std::optional<Colouring> colouring;
  std::optional<Graph> forbidden;
  std::optional<ReconfigPath> path;
};

Decision decide_cos(const CosInstance& instance, const SolveOptions& options = {});
Decision decide_cpos(const CposInstance& instance, const SolveOptions& options = {});
Decision decide_scos(const ScosInstance& instance, const SolveOptions& options = {});

/// Output instance of a reduction plus where every part of the constructed
/// graph G′ landed. Vertex blocks appear in G′ in this order: G, clique_k,
/// clique_l, catalog members, padding.
template <class Instance>
struct ReductionArtifact {
  Instance instance;
  VertexMap graph_map;                  // V(G) into V(G′)
  std::vector<Vertex> clique_k;         // universal (p-3)-clique, or K = x₁..x_{p-4}
  std::vector<Vertex> clique_l;         // L = y₁..y₄ (colour-path reduction only)
  std::vector<VertexMap> catalog_maps;  // one per catalog member
  std::vector<Vertex> padding;
  int p = 0;
  Mode mode = Mode::Generalized;

  const Graph& output_graph() const { return instance.graph; }
};

using CosReduction = ReductionArtifact<CosInstance>;
using CposReduction = ReductionArtifact<CposInstance>;

/// True iff the artifact's vertex lists are disjoint and cover V(G′).
template <class Instance>
bool partitions_vertices(const ReductionArtifact<Instance>& artifact);

/// 3-Colouring → Colouring-or-Subgraph. G′ is G plus a universal (p-3)-clique,
/// disjoint union with every p-vertex catalog member, padded to exactly 3n
/// vertices in faithful mode. Faithful mode derives p = ⌈√(log₂ 3n)⌉ and
/// checks the size inequalities, naming the one that fails; generalized mode
/// needs an explicit p and never pads. Both require p >= 4.
CosReduction reduce_3col(const Graph& g, Mode mode, std::optional<int> p = std::nullopt,
                         int cap = kDefaultEnumerationCap);

/// Proper p-colouring of G′ from a proper 3-colouring of G.
Colouring cos_forward_colouring(const CosReduction& artifact, const Colouring& three_colouring);

/// Proper 3-colouring of G from any proper p-colouring of G′, after
/// permuting colours so the universal clique shows 4..p.
Colouring cos_backward_colouring(const CosReduction& artifact, const Colouring& p_colouring);

/// 4-Colour-Path → Colour-Path-or-Subgraph. G* adds a clique K of p-4
/// vertices joined to all of G and a 4-clique L joined to K only; α′ and β′
/// extend α and β identically outside G. Faithful mode needs p >= 5.
CposReduction reduce_4cp(const Graph& g, const Colouring& alpha, const Colouring& beta, Mode mode,
                         std::optional<int> p = std::nullopt, int cap = kDefaultEnumerationCap);

/// Walk in R_4(G) → walk in R_p(G′) holding every vertex outside G at α′.
ReconfigPath cpos_lift_path(const CposReduction& artifact, const ReconfigPath& path);

/// Walk in R_p(G′) → walk in R_4(G): restrict to G, normalise the colours
/// shown on the frozen clique K∪L, and drop steps that leave G unchanged.
ReconfigPath cpos_restrict_path(const CposReduction& artifact, const ReconfigPath& path);

/// Coordinate layout of the succinct reduction for an m-variable-pair input.
/// Output codes have 3m coordinates: [1..m] original, then `universal`
/// clique coordinates, then one block of p coordinates per catalog member,
/// then unused padding coordinates.
struct SuccinctLayout {
  unsigned m = 0;
  int p = 0;
  unsigned universal = 0;
  unsigned catalog_offset = 0;  // first catalog coordinate minus one
  std::size_t catalog_members = 0;
  unsigned used = 0;   // coordinates in use
  unsigned total = 0;  // 3m

  /// Coordinate (1-based) of vertex i of catalog member h.
  unsigned catalog_coordinate(std::size_t h, unsigned i) const {
    return catalog_offset + static_cast<unsigned>(h) * static_cast<unsigned>(p) + i + 1;
  }
};

/// p = ⌈√(log₂ 3m)⌉ and the coordinate budget check m + max(p-3, 0) + r·p <= 3m.
SuccinctLayout succinct_layout(unsigned m, int cap = kDefaultEnumerationCap);

/// Succinct 3-Colouring → Succinct Colouring-or-Subgraph over exactly 6m
/// variables.
ScosInstance reduce_succinct(const Circuit& circuit, int cap = kDefaultEnumerationCap);

/// Existential certificate for the ∃∀ predicate: a colouring, or an ordered
/// graph H on at most p vertices.
using Sigma2Certificate = std::variant<Colouring, Graph>;

/// The polynomial-time predicate. For a colouring: it is a proper colouring
/// with colours <= p. For a graph H: the challenge tuple is not an induced
/// copy of H in that order (non-injective tuples are never copies). Throws
/// DomainError on a malformed certificate or challenge.
bool sigma2_verify(const Graph& g, int p, const Sigma2Certificate& certificate, std::span<const Vertex> challenge);

/// Exhaustive ∃ certificate ∀ challenge loop over the predicate. Throws
/// CapExceeded when the certificate space is too large to enumerate.
bool sigma2_decide(const Graph& g, int p);

using AnyInstance = std::variant<CosInstance, CposInstance, ScosInstance>;

struct FastOptions {
  SolveOptions solve;
  bool verify_promise = false;
};

struct FastDecision {
  bool yes = false;
  bool delegated = false;
  /// Set only when verify_promise was requested.
  std::optional<bool> promise_holds;
};

/// Decision procedure for a hereditary class avoiding `forbidden` (ℓ
/// vertices). Instances of size at most 2^(ℓ²) (n, or m for the succinct
/// problem) go to the full procedure; larger ones are yes-instances because
/// the class promise makes them H-free with ℓ < ⌈√(log₂ size)⌉.
FastDecision hereditary_fast_decide(const AnyInstance& instance, const Graph& forbidden,
                                    const FastOptions& options = {});

}  // namespace hjump
