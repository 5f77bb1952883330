#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hjump/colouring.hpp"
#include "hjump/graph.hpp"

namespace hjump {

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000;

/// Default node budget for reconfiguration searches: HJ_BUDGET from the
/// environment when set to a positive integer, otherwise kDefaultNodeBudget.
std::uint64_t default_node_budget();

/// A sequence of k-colourings of one graph. Valid when every element is
/// proper and consecutive elements differ on exactly one vertex. An empty
/// sequence is the empty path.
struct ReconfigPath {
  int k = 1;
  std::vector<Colouring> steps;

  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }
};

/// Why `is_reconfig_walk` failed, or an empty string.
std::string walk_defect(const Graph& g, const ReconfigPath& path);
inline bool is_reconfig_walk(const Graph& g, const ReconfigPath& path) { return walk_defect(g, path).empty(); }

/// All proper k-colourings at Hamming distance one from c, ordered by vertex
/// and then colour. Throws ImproperColouring if c is not proper.
std::vector<Colouring> recolour_neighbours(const Graph& g, int k, const Colouring& c);

/// Shortest α→β path in R_k(g), searched independently per connected
/// component of g and stitched together component by component. Components
/// on which α and β agree are never searched. The node budget is shared by
/// all component searches of one call.
std::optional<ReconfigPath> find_path(const Graph& g, int k, const Colouring& alpha, const Colouring& beta,
                                      std::uint64_t budget = default_node_budget());

bool path_exists(const Graph& g, int k, const Colouring& alpha, const Colouring& beta,
                 std::uint64_t budget = default_node_budget());

/// Breadth-first search over R_k(g) as a whole, without component
/// decomposition. Exists as a control for the decomposed search.
std::optional<ReconfigPath> find_path_whole_graph(const Graph& g, int k, const Colouring& alpha,
                                                  const Colouring& beta,
                                                  std::uint64_t budget = default_node_budget());

/// Every colouring in the connected component of R_k(g) containing c.
std::vector<Colouring> reachable_colourings(const Graph& g, int k, const Colouring& c,
                                            std::uint64_t budget = default_node_budget());

/// Vertices whose closed neighbourhood already shows all k colours.
std::vector<Vertex> frozen_vertices(const Graph& g, int k, const Colouring& c);

/// Pull interface for streamed colouring sequences.
class ColouringSource {
 public:
  virtual ~ColouringSource() = default;
  /// Next colouring, or nullopt at end of stream. Malformed elements throw
  /// ParseError.
  virtual std::optional<Colouring> next() = 0;
};

class VectorSource final : public ColouringSource {
 public:
  explicit VectorSource(std::vector<Colouring> items) : items_(std::move(items)) {}
  std::optional<Colouring> next() override {
    if (pos_ == items_.size()) return std::nullopt;
    return items_[pos_++];
  }

 private:
  std::vector<Colouring> items_;
  std::size_t pos_ = 0;
};

struct PathVerdict {
  bool valid = false;
  std::size_t length = 0;  // colourings consumed
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks that the streamed sequence starts at α, ends at β, and walks R_k(g).
/// At most two colourings are held at any time.
PathVerdict validate_path_streaming(const Graph& g, int k, const Colouring& alpha, const Colouring& beta,
                                    ColouringSource& source);

}  // namespace hjump
