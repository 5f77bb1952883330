#include <string>

#include "hjump/error.hpp"
#include "hjump/problems.hpp"

namespace hjump {

namespace {

constexpr std::uint64_t kMaxCertificates = 50'000'000;

std::uint64_t power_capped(std::uint64_t base, std::size_t exponent) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && total > kMaxCertificates / base) return kMaxCertificates + 1;
    total *= base;
  }
  return total;
}

// Advances an odometer over {lo..hi}^len; false once it wraps around.
template <class T>
bool advance(std::vector<T>& digits, T lo, T hi) {
  for (auto& d : digits) {
    if (d < hi) {
      ++d;
      return true;
    }
    d = lo;
  }
  return false;
}

}  // namespace

bool sigma2_verify(const Graph& g, int p, const Sigma2Certificate& certificate, std::span<const Vertex> challenge) {
  if (const auto* colouring = std::get_if<Colouring>(&certificate)) {
    if (colouring->size() != g.vertex_count()) throw DomainError("malformed certificate: colouring has the wrong length");
    for (Colour c : colouring->colours())
      if (c > p) throw DomainError("malformed certificate: colour " + std::to_string(c) + " exceeds p");
    return is_proper(g, *colouring);
  }

  const Graph& h = std::get<Graph>(certificate);
  if (h.vertex_count() > static_cast<std::size_t>(p)) {
    throw DomainError("malformed certificate: H has more than p = " + std::to_string(p) + " vertices");
  }
  if (challenge.size() != h.vertex_count()) {
    throw DomainError("malformed challenge: expected " + std::to_string(h.vertex_count()) + " vertices");
  }
  for (Vertex v : challenge)
    if (v >= g.vertex_count()) throw DomainError("malformed challenge: vertex out of range");
  for (std::size_t i = 0; i < challenge.size(); ++i)
    for (std::size_t j = i + 1; j < challenge.size(); ++j)
      if (challenge[i] == challenge[j]) return true;  // not an embedding
  for (Vertex i = 0; i < challenge.size(); ++i)
    for (Vertex j = i + 1; j < challenge.size(); ++j)
      if (h.has_edge(i, j) != g.has_edge(challenge[i], challenge[j])) return true;
  return false;
}

bool sigma2_decide(const Graph& g, int p) {
  if (p < 1) throw ParameterError("p must be at least 1");
  const std::size_t n = g.vertex_count();
  if (power_capped(static_cast<std::uint64_t>(p), n) > kMaxCertificates) {
    throw CapExceeded("sigma2_decide: p^n colouring certificates exceed the enumeration limit");
  }

  // Colouring certificates; the challenge is ignored.
  std::vector<Colour> colours(n, 1);
  do {
    if (sigma2_verify(g, p, Colouring(p, colours), {})) return true;
  } while (advance<Colour>(colours, 1, static_cast<Colour>(p)));

  // Ordered graphs H on 1..p vertices against every challenge tuple.
  for (std::size_t order = 1; order <= static_cast<std::size_t>(p); ++order) {
    const std::size_t pairs = order * (order - 1) / 2;
    if (pairs >= 63 || power_capped(n, order) > kMaxCertificates) {
      throw CapExceeded("sigma2_decide: challenge space exceeds the enumeration limit");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<Edge> edges;
      std::size_t bit = 0;
      for (Vertex i = 0; i < order; ++i)
        for (Vertex j = i + 1; j < order; ++j, ++bit)
          if (mask >> bit & 1u) edges.emplace_back(i, j);
      const Sigma2Certificate h = Graph(order, edges);

      bool for_all = true;
      if (n > 0) {
        std::vector<Vertex> challenge(order, 0);
        do {
          if (!sigma2_verify(g, p, h, challenge)) {
            for_all = false;
            break;
          }
        } while (advance<Vertex>(challenge, 0, static_cast<Vertex>(n - 1)));
      }
      if (for_all) return true;
    }
  }
  return false;
}

}  // namespace hjump
