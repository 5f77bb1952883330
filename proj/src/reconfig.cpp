#include "hjump/reconfig.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>

#include "hjump/error.hpp"

namespace hjump {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("HJ_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultNodeBudget;
}

namespace {

void require_colouring(const Graph& g, int k, const Colouring& c, const char* what) {
  if (c.size() != g.vertex_count()) {
    throw DomainError(std::string("domain error: ") + what + " covers " + std::to_string(c.size()) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  for (Colour x : c.colours())
    if (x > k) throw DomainError(std::string(what) + " uses colour " + std::to_string(x) + " > k");
  if (!is_proper(g, c)) throw ImproperColouring(std::string("improper colouring: ") + what);
}

std::size_t hamming(const Colouring& a, const Colouring& b) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < a.size(); ++v) d += a[static_cast<Vertex>(v)] != b[static_cast<Vertex>(v)];
  return d;
}

// Colouring encoded as a base-k integer: digit v is colour(v) - 1.
struct IntegerKeys {
  using Key = std::uint64_t;
  int k;
  std::vector<std::uint64_t> weight;

  static bool fits(std::size_t n, int k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (total > UINT64_MAX / static_cast<std::uint64_t>(k)) return false;
      total *= static_cast<std::uint64_t>(k);
    }
    return true;
  }

  IntegerKeys(std::size_t n, int k_) : k(k_), weight(n) {
    std::uint64_t w = 1;
    for (std::size_t v = 0; v < n; ++v) {
      weight[v] = w;
      if (v + 1 < n) w *= static_cast<std::uint64_t>(k);
    }
  }
  Key encode(std::span<const Colour> colours) const {
    Key key = 0;
    for (std::size_t v = 0; v < colours.size(); ++v) key += (colours[v] - 1u) * weight[v];
    return key;
  }
  void decode(Key key, std::vector<Colour>& out) const {
    for (std::size_t v = 0; v < out.size(); ++v) {
      out[v] = static_cast<Colour>(key % static_cast<std::uint64_t>(k) + 1);
      key /= static_cast<std::uint64_t>(k);
    }
  }
  Key recolour(Key key, Vertex v, Colour from, Colour to) const {
    return key - (from - 1u) * weight[v] + (to - 1u) * weight[v];
  }
};

// Fallback when k^n overflows 64 bits: one byte per vertex.
struct ByteKeys {
  using Key = std::string;

  ByteKeys(std::size_t, int) {}
  Key encode(std::span<const Colour> colours) const {
    Key key(colours.size(), '\0');
    for (std::size_t v = 0; v < colours.size(); ++v) key[v] = static_cast<char>(colours[v]);
    return key;
  }
  void decode(const Key& key, std::vector<Colour>& out) const {
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = static_cast<unsigned char>(key[v]);
  }
  Key recolour(Key key, Vertex v, Colour, Colour to) const {
    key[v] = static_cast<char>(to);
    return key;
  }
};

struct SearchResult {
  std::optional<ReconfigPath> path;
  std::vector<Colouring> reached;  // filled only when exploring
  std::uint64_t visited = 0;
};

// Breadth-first search in R_k(g) from `start`. Stops at `target` when given,
// otherwise explores the whole component.
template <class Keys>
SearchResult breadth_first(const Graph& g, int k, const Colouring& start, const Colouring* target,
                           std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  Keys keys(n, k);
  using Key = typename Keys::Key;

  std::unordered_map<Key, Key> parent;
  std::deque<Key> queue;
  const Key root = keys.encode(start.colours());
  const Key goal = target ? keys.encode(target->colours()) : Key{};
  parent.emplace(root, root);
  queue.push_back(root);

  SearchResult result;
  std::vector<Colour> colours(n);
  std::vector<char> blocked(static_cast<std::size_t>(k) + 1);
  bool found = target && root == goal;
  while (!queue.empty() && !found) {
    const Key key = queue.front();
    queue.pop_front();
    keys.decode(key, colours);
    for (Vertex v = 0; v < n && !found; ++v) {
      std::fill(blocked.begin(), blocked.end(), 0);
      for (Vertex w : g.neighbours(v)) blocked[colours[w]] = 1;
      for (int c = 1; c <= k; ++c) {
        if (c == colours[v] || blocked[c]) continue;
        Key next = keys.recolour(key, v, colours[v], static_cast<Colour>(c));
        auto [it, inserted] = parent.emplace(next, key);
        if (!inserted) continue;
        if (parent.size() > budget) {
          throw BudgetExhausted("budget exhausted: reconfiguration search exceeded " + std::to_string(budget) +
                                " nodes");
        }
        if (target && it->first == goal) {
          found = true;
          break;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  result.visited = parent.size();

  if (target) {
    if (!found) return result;
    std::vector<Colouring> reversed;
    Key cursor = goal;
    while (true) {
      keys.decode(cursor, colours);
      reversed.emplace_back(k, colours);
      const Key& up = parent.at(cursor);
      if (up == cursor) break;
      cursor = up;
    }
    std::reverse(reversed.begin(), reversed.end());
    result.path = ReconfigPath{k, std::move(reversed)};
  } else {
    result.reached.reserve(parent.size());
    for (const auto& entry : parent) {
      keys.decode(entry.first, colours);
      result.reached.emplace_back(k, colours);
    }
  }
  return result;
}

SearchResult search(const Graph& g, int k, const Colouring& start, const Colouring* target, std::uint64_t budget) {
  if (IntegerKeys::fits(g.vertex_count(), k)) return breadth_first<IntegerKeys>(g, k, start, target, budget);
  if (k > 255) throw CapExceeded("reconfiguration search supports at most 255 colours");
  return breadth_first<ByteKeys>(g, k, start, target, budget);
}

Colouring restrict(const Colouring& c, std::span<const Vertex> vertices, int k) {
  std::vector<Colour> colours(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) colours[i] = c[vertices[i]];
  return Colouring(k, std::move(colours));
}

}  // namespace

std::string walk_defect(const Graph& g, const ReconfigPath& path) {
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const Colouring& c = path.steps[i];
    if (c.size() != g.vertex_count()) return "step " + std::to_string(i) + " has the wrong number of vertices";
    for (Colour x : c.colours())
      if (x > path.k) return "step " + std::to_string(i) + " uses a colour above k";
    if (!is_proper(g, c)) return "step " + std::to_string(i) + " is not a proper colouring";
    if (i > 0 && hamming(path.steps[i - 1], c) != 1)
      return "steps " + std::to_string(i - 1) + " and " + std::to_string(i) + " do not differ on exactly one vertex";
  }
  return {};
}

std::vector<Colouring> recolour_neighbours(const Graph& g, int k, const Colouring& c) {
  require_colouring(g, k, c, "input colouring");
  std::vector<Colouring> out;
  std::vector<char> blocked(static_cast<std::size_t>(k) + 1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (Vertex w : g.neighbours(v)) blocked[c[w]] = 1;
    for (int x = 1; x <= k; ++x)
      if (x != c[v] && !blocked[x]) out.push_back(c.with_palette(k).with(v, static_cast<Colour>(x)));
  }
  return out;
}

std::optional<ReconfigPath> find_path(const Graph& g, int k, const Colouring& alpha, const Colouring& beta,
                                      std::uint64_t budget) {
  require_colouring(g, k, alpha, "alpha");
  require_colouring(g, k, beta, "beta");
  const Colouring start = alpha.with_palette(k);
  ReconfigPath path{k, {start}};
  if (alpha.colours().size() == beta.colours().size() &&
      std::equal(alpha.colours().begin(), alpha.colours().end(), beta.colours().begin())) {
    return path;
  }

  std::uint64_t remaining = budget;
  std::vector<Colour> current(start.colours().begin(), start.colours().end());
  for (const auto& component : connected_components(g)) {
    const Colouring from = restrict(alpha, component, k);
    const Colouring to = restrict(beta, component, k);
    if (from == to) continue;
    auto [sub, map] = induced_subgraph(g, component);
    SearchResult piece = search(sub, k, from, &to, remaining);
    remaining -= std::min(remaining, piece.visited);
    if (!piece.path) return std::nullopt;
    for (std::size_t i = 1; i < piece.path->steps.size(); ++i) {
      const Colouring& step = piece.path->steps[i];
      for (std::size_t j = 0; j < component.size(); ++j) current[component[j]] = step[static_cast<Vertex>(j)];
      path.steps.emplace_back(k, current);
    }
  }
  return path;
}

bool path_exists(const Graph& g, int k, const Colouring& alpha, const Colouring& beta, std::uint64_t budget) {
  return find_path(g, k, alpha, beta, budget).has_value();
}

std::optional<ReconfigPath> find_path_whole_graph(const Graph& g, int k, const Colouring& alpha,
                                                  const Colouring& beta, std::uint64_t budget) {
  require_colouring(g, k, alpha, "alpha");
  require_colouring(g, k, beta, "beta");
  const Colouring from = alpha.with_palette(k);
  const Colouring to = beta.with_palette(k);
  return search(g, k, from, &to, budget).path;
}

std::vector<Colouring> reachable_colourings(const Graph& g, int k, const Colouring& c, std::uint64_t budget) {
  require_colouring(g, k, c, "start colouring");
  return search(g, k, c.with_palette(k), nullptr, budget).reached;
}

std::vector<Vertex> frozen_vertices(const Graph& g, int k, const Colouring& c) {
  require_colouring(g, k, c, "colouring");
  std::vector<Vertex> out;
  std::vector<char> seen(static_cast<std::size_t>(k) + 1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    int distinct = 0;
    auto mark = [&](Colour x) {
      if (!seen[x]) {
        seen[x] = 1;
        ++distinct;
      }
    };
    mark(c[v]);
    for (Vertex w : g.neighbours(v)) mark(c[w]);
    if (distinct == k) out.push_back(v);
  }
  return out;
}

PathVerdict validate_path_streaming(const Graph& g, int k, const Colouring& alpha, const Colouring& beta,
                                    ColouringSource& source) {
  PathVerdict verdict;
  auto fail = [&](std::string reason) {
    verdict.valid = false;
    verdict.reason = std::move(reason);
    return verdict;
  };
  auto same = [](const Colouring& a, const Colouring& b) {
    return a.size() == b.size() && std::equal(a.colours().begin(), a.colours().end(), b.colours().begin());
  };

  std::optional<Colouring> previous;
  while (auto item = source.next()) {
    const std::size_t index = verdict.length++;
    if (item->size() != g.vertex_count()) return fail("colouring " + std::to_string(index) + " has the wrong size");
    for (Colour x : item->colours())
      if (x > k) return fail("colouring " + std::to_string(index) + " uses a colour above k");
    if (!is_proper(g, *item)) return fail("colouring " + std::to_string(index) + " is not proper");
    if (!previous) {
      if (!same(*item, alpha)) return fail("first colouring is not alpha");
    } else if (hamming(*previous, *item) != 1) {
      return fail("colourings " + std::to_string(index - 1) + " and " + std::to_string(index) +
                  " do not differ on exactly one vertex");
    }
    previous = std::move(item);
  }
  if (!previous) return fail("empty sequence");
  if (!same(*previous, beta)) return fail("last colouring is not beta");
  verdict.valid = true;
  return verdict;
}

}  // namespace hjump
