#pragma once

#include <optional>

#include "hjump/catalog.hpp"
#include "hjump/graph.hpp"

namespace hjump {

/// An embedding m of h into g with uv ∈ E(h) ⇔ m(u)m(v) ∈ E(g), if any.
/// Backtracking over injective assignments with degree pruning.
std::optional<VertexMap> contains_induced(const Graph& g, const Graph& h);

/// True iff `map` is an injective induced embedding of h into g.
bool is_induced_embedding(const Graph& g, const Graph& h, const VertexMap& map);

/// The first p-vertex catalog member (in catalog order) that g does not
/// contain as an induced subgraph. Testing exactly p vertices suffices: a
/// graph that avoids some smaller F also avoids every p-vertex graph that
/// contains F.
std::optional<Graph> find_forbidden(const Graph& g, int p, int cap = kDefaultEnumerationCap);

}  // namespace hjump
