#include "hjump/problems.hpp"

#include <string>

#include "hjump/error.hpp"
#include "hjump/subgraph.hpp"

namespace hjump {

std::string_view to_string(Mode mode) { return mode == Mode::Faithful ? "faithful" : "generalized"; }

Mode parse_mode(std::string_view text) {
  if (text == "faithful") return Mode::Faithful;
  if (text == "generalized") return Mode::Generalized;
  throw DomainError("unknown mode '" + std::string(text) + "' (expected faithful or generalized)");
}

namespace {

void check_faithful_p(int p, std::size_t n) {
  const int derived = param_p(n);
  if (p != derived) {
    throw ParameterError("faithful mode requires p = ceil(sqrt(log2 n)) = " + std::to_string(derived) + " for n = " +
                         std::to_string(n) + ", got p = " + std::to_string(p));
  }
}

void check_endpoint(const Graph& g, int p, const Colouring& c, const char* name) {
  if (c.size() != g.vertex_count()) throw DomainError(std::string("domain error: ") + name + " has the wrong length");
  for (Colour x : c.colours())
    if (x > p) throw DomainError(std::string(name) + " uses colour " + std::to_string(x) + " > p");
  if (!is_proper(g, c)) throw ImproperColouring(std::string("improper colouring: ") + name);
}

Decision decide_colouring_or_subgraph(const Graph& g, int p, const SolveOptions& options) {
  enumerate_graphs(p, options.enumeration_cap);  // fail on the cap before any search
  Decision decision;
  if (auto colouring = find_k_colouring(g, p)) {
    decision.yes = true;
    decision.colouring = std::move(colouring);
    return decision;
  }
  if (auto forbidden = find_forbidden(g, p, options.enumeration_cap)) {
    decision.yes = true;
    decision.forbidden = std::move(forbidden);
  }
  return decision;
}

}  // namespace

CosInstance CosInstance::faithful(Graph g) {
  const int p = param_p(g.vertex_count());
  return CosInstance{std::move(g), p, Mode::Faithful};
}

CosInstance CosInstance::generalized(Graph g, int p) {
  CosInstance instance{std::move(g), p, Mode::Generalized};
  instance.validate();
  return instance;
}

void CosInstance::validate() const {
  if (p < 1) throw ParameterError("p must be at least 1");
  if (mode == Mode::Faithful) check_faithful_p(p, graph.vertex_count());
}

CposInstance CposInstance::faithful(Graph g, Colouring alpha, Colouring beta) {
  const int p = param_p(g.vertex_count());
  CposInstance instance{std::move(g), std::move(alpha), std::move(beta), p, Mode::Faithful};
  instance.validate();
  return instance;
}

CposInstance CposInstance::generalized(Graph g, Colouring alpha, Colouring beta, int p) {
  CposInstance instance{std::move(g), std::move(alpha), std::move(beta), p, Mode::Generalized};
  instance.validate();
  return instance;
}

void CposInstance::validate() const {
  if (p < 1) throw ParameterError("p must be at least 1");
  if (mode == Mode::Faithful) check_faithful_p(p, graph.vertex_count());
  check_endpoint(graph, p, alpha, "alpha");
  check_endpoint(graph, p, beta, "beta");
}

int ScosInstance::p() const { return param_p(circuit.m()); }

Decision decide_cos(const CosInstance& instance, const SolveOptions& options) {
  instance.validate();
  return decide_colouring_or_subgraph(instance.graph, instance.p, options);
}

Decision decide_cpos(const CposInstance& instance, const SolveOptions& options) {
  instance.validate();
  Decision decision;
  // The H-free disjunct is cheap next to a reconfiguration search.
  if (auto forbidden = find_forbidden(instance.graph, instance.p, options.enumeration_cap)) {
    decision.yes = true;
    decision.forbidden = std::move(forbidden);
    return decision;
  }
  if (auto path = find_path(instance.graph, instance.p, instance.alpha, instance.beta, options.node_budget)) {
    decision.yes = true;
    decision.path = std::move(path);
  }
  return decision;
}

Decision decide_scos(const ScosInstance& instance, const SolveOptions& options) {
  const int p = instance.p();
  const Graph g = materialize(instance.circuit, options.materialization_cap);
  return decide_colouring_or_subgraph(g, p, options);
}

FastDecision hereditary_fast_decide(const AnyInstance& instance, const Graph& forbidden, const FastOptions& options) {
  const std::size_t ell = forbidden.vertex_count();
  std::uint64_t size = 0;
  const Graph* graph = nullptr;
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, ScosInstance>) {
          size = inst.circuit.m();
        } else {
          size = inst.graph.vertex_count();
          graph = &inst.graph;
        }
      },
      instance);

  FastDecision result;
  if (options.verify_promise) {
    if (graph) {
      result.promise_holds = !contains_induced(*graph, forbidden).has_value();
    } else {
      const auto& scos = std::get<ScosInstance>(instance);
      const Graph g = materialize(scos.circuit, options.solve.materialization_cap);
      result.promise_holds = !contains_induced(g, forbidden).has_value();
    }
  }

  // size <= 2^(ℓ²); for ℓ² >= 64 every representable size is below it.
  const bool small = ell * ell >= 64 || size <= (std::uint64_t{1} << (ell * ell));
  if (!small) {
    result.yes = true;
    return result;
  }
  result.delegated = true;
  result.yes = std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, CosInstance>) return decide_cos(inst, options.solve).yes;
        else if constexpr (std::is_same_v<T, CposInstance>) return decide_cpos(inst, options.solve).yes;
        else return decide_scos(inst, options.solve).yes;
      },
      instance);
  return result;
}

}  // namespace hjump
