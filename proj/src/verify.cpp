#include "hjump/verify.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "hjump/error.hpp"
#include "hjump/subgraph.hpp"

namespace hjump {

bool brute_force_colourable(const Graph& g, int k) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  if (k < 1) return false;
  std::vector<Colour> colours(n, 1);
  const auto edges = g.edges();
  while (true) {
    bool proper = true;
    for (auto [u, v] : edges) {
      if (colours[u] == colours[v]) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
    std::size_t i = 0;
    while (i < n && colours[i] == k) colours[i++] = 1;
    if (i == n) return false;
    ++colours[i];
  }
}

std::vector<Graph> all_labelled_graphs(std::size_t n) {
  if (n > 8) throw CapExceeded("all_labelled_graphs: n must be at most 8");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1u) edges.push_back(pairs[b]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<Colouring> all_proper_colourings(const Graph& g, int k) {
  const std::size_t n = g.vertex_count();
  std::vector<Colouring> out;
  std::vector<Colour> colours(n, 1);
  while (true) {
    Colouring c(k, colours);
    if (is_proper(g, c)) out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < n && colours[i] == k) colours[i++] = 1;
    if (i == n) break;
    ++colours[i];
  }
  return out;
}

Graph explicit_succinct_graph(const Graph& materialized, const SuccinctLayout& layout, int cap) {
  const unsigned width = layout.total;
  if (materialized.vertex_count() != (std::size_t{1} << layout.m)) {
    throw DomainError("explicit_succinct_graph: input must have 2^m vertices");
  }
  if (width > 20) throw CapExceeded("explicit_succinct_graph: 3m exceeds 20");
  auto one_hot = [&](unsigned coordinate) -> Vertex { return Vertex{1} << (width - coordinate); };
  auto old_code = [&](Vertex u) -> Vertex { return u << (width - layout.m); };

  std::vector<Edge> edges;
  for (auto [u, v] : materialized.edges()) edges.emplace_back(old_code(u), old_code(v));

  std::vector<Vertex> universal;
  for (unsigned j = 1; j <= layout.universal; ++j) universal.push_back(one_hot(layout.m + j));
  for (std::size_t a = 0; a < universal.size(); ++a) {
    for (std::size_t b = a + 1; b < universal.size(); ++b) edges.emplace_back(universal[a], universal[b]);
    for (Vertex u = 0; u < materialized.vertex_count(); ++u) edges.emplace_back(universal[a], old_code(u));
  }

  const GraphCatalog& catalog = enumerate_graphs(layout.p, cap);
  for (std::size_t h = 0; h < catalog.size(); ++h) {
    for (auto [i, j] : catalog.members[h].edges()) {
      edges.emplace_back(one_hot(layout.catalog_coordinate(h, i)), one_hot(layout.catalog_coordinate(h, j)));
    }
  }
  return Graph(std::size_t{1} << width, edges);
}

namespace {

using Check = std::function<CaseOutcome()>;

struct Case {
  std::string label;
  Check run;
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " E={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string describe(const Colouring& c) {
  std::string out;
  for (Colour x : c.colours()) out += std::to_string(x);
  return out;
}

CaseOutcome pass(std::string detail = {}) { return {CaseOutcome::Pass, {}, std::move(detail)}; }
CaseOutcome mismatch(std::string detail) { return {CaseOutcome::Mismatch, {}, std::move(detail)}; }

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

// Graphs for the colouring suites: one per isomorphism class for each
// order 1..max_n, then `samples` random labelled graphs.
std::vector<Graph> suite_graphs(const VerifyConfig& config, std::mt19937_64& rng, std::size_t random_max_n) {
  if (config.max_n < 1) throw ParameterError("--max-n must be at least 1");
  std::vector<Graph> graphs;
  for (int n = 1; n <= config.max_n; ++n) {
    const auto& catalog = enumerate_graphs(n);
    graphs.insert(graphs.end(), catalog.members.begin(), catalog.members.end());
  }
  for (std::size_t s = 0; s < config.samples; ++s) {
    const std::size_t n = 1 + uniform_index(rng, random_max_n);
    graphs.push_back(random_graph(rng, n));
  }
  return graphs;
}

std::vector<Case> cases_3col(const VerifyConfig& config, std::mt19937_64& rng) {
  const int p = config.p ? config.p : 4;
  std::vector<Case> cases;
  for (Graph g : suite_graphs(config, rng, std::max<std::size_t>(config.max_n, 10))) {
    std::string label = describe(g);
    cases.push_back({std::move(label), [g = std::move(g), p] {
                       const CosReduction artifact = reduce_3col(g, Mode::Generalized, p);
                       const Decision decision = decide_cos(artifact.instance);
                       const bool expected = brute_force_colourable(g, 3);
                       if (decision.yes != expected) {
                         return mismatch(std::string("reduced instance says ") + (decision.yes ? "YES" : "NO") +
                                         ", 3-colourability says " + (expected ? "YES" : "NO"));
                       }
                       if (decision.colouring) {
                         const Colouring back = cos_backward_colouring(artifact, *decision.colouring);
                         if (!is_proper(g, back)) return mismatch("backward colouring is not proper");
                         const Colouring forward = cos_forward_colouring(artifact, back);
                         if (!is_proper(artifact.output_graph(), forward)) {
                           return mismatch("forward colouring is not proper");
                         }
                       }
                       return pass(expected ? "YES" : "NO");
                     }});
  }
  return cases;
}

Case cpos_case(Graph g, Colouring alpha, Colouring beta, int p, std::uint64_t budget) {
  std::string label = describe(g) + " a=" + describe(alpha) + " b=" + describe(beta);
  return {std::move(label), [g = std::move(g), alpha = std::move(alpha), beta = std::move(beta), p, budget] {
            const CposReduction artifact = reduce_4cp(g, alpha, beta, Mode::Generalized, p);
            SolveOptions options;
            options.node_budget = budget;
            const Decision decision = decide_cpos(artifact.instance, options);
            const bool expected = path_exists(g, 4, alpha, beta, budget);
            if (decision.yes != expected) {
              return mismatch(std::string("reduced instance says ") + (decision.yes ? "YES" : "NO") +
                              ", R_4 reachability says " + (expected ? "YES" : "NO"));
            }
            if (decision.path) {
              const ReconfigPath restricted = cpos_restrict_path(artifact, *decision.path);
              VectorSource source(restricted.steps);
              const PathVerdict verdict = validate_path_streaming(g, 4, alpha, beta, source);
              if (!verdict) return mismatch("restricted path invalid: " + verdict.reason);
            }
            return pass(expected ? "YES" : "NO");
          }};
}

std::vector<Case> cases_4cp(const VerifyConfig& config, std::mt19937_64& rng) {
  if (config.max_n < 0) throw ParameterError("--max-n must be non-negative");
  if (config.max_n > 4) throw CapExceeded("4cp-cpos: exhaustive pairs need --max-n <= 4");
  const int p = config.p ? config.p : 5;
  std::vector<Case> cases;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(config.max_n); ++n) {
    for (const Graph& g : all_labelled_graphs(n)) {
      const auto colourings = all_proper_colourings(g, 4);
      for (const Colouring& a : colourings)
        for (const Colouring& b : colourings) cases.push_back(cpos_case(g, a, b, p, config.budget));
    }
  }
  // Sampled pairs on graphs one vertex larger than the exhaustive range.
  const std::size_t sample_n = static_cast<std::size_t>(config.max_n) + 1;
  for (std::size_t s = 0; s < config.samples; ++s) {
    Graph g = random_graph(rng, sample_n);
    const auto colourings = all_proper_colourings(g, 4);
    if (colourings.empty()) continue;
    const Colouring& a = colourings[uniform_index(rng, colourings.size())];
    const Colouring& b = colourings[uniform_index(rng, colourings.size())];
    cases.push_back(cpos_case(std::move(g), a, b, p, config.budget));
  }
  return cases;
}

// Random circuit: a disjunction of up to four random conjunctions of
// literals, occasionally a bare constant.
Circuit random_circuit(std::mt19937_64& rng, unsigned m) {
  CircuitBuilder b(m);
  const unsigned vars = 2 * m;
  std::uniform_int_distribution<unsigned> var(1, vars);
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> width(1, static_cast<int>(vars));
  std::bernoulli_distribution coin(0.5);
  std::vector<NodeId> disjuncts;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<NodeId> literals;
    const int w = width(rng);
    for (int i = 0; i < w; ++i) {
      const NodeId x = b.var(var(rng));
      literals.push_back(coin(rng) ? x : b.negate(x));
    }
    disjuncts.push_back(b.conjunction(std::move(literals)));
  }
  if (disjuncts.empty() && coin(rng)) return b.build(b.constant(true));
  return b.build(b.disjunction(std::move(disjuncts)));
}

std::vector<Case> cases_succinct(const VerifyConfig& config, std::mt19937_64& rng) {
  const unsigned m = config.m;
  if (m < 1) throw ParameterError("--m must be at least 1");
  if (3 * m > 12) throw CapExceeded("s3col-scos: pointwise agreement needs --m <= 4");
  std::vector<std::pair<std::string, Circuit>> inputs;
  {
    CircuitBuilder b(m);
    inputs.emplace_back("const-false", b.build(b.constant(false)));
  }
  {
    CircuitBuilder b(m);
    inputs.emplace_back("const-true", b.build(b.constant(true)));
  }
  inputs.emplace_back("longhand K" + std::to_string(m), encode_longhand(Graph::complete(m)));
  inputs.emplace_back("longhand P" + std::to_string(m), encode_longhand(Graph::path(m)));
  const std::size_t samples = config.samples ? config.samples : 20;
  for (std::size_t s = 0; s < samples; ++s) inputs.emplace_back("random#" + std::to_string(s), random_circuit(rng, m));

  std::vector<Case> cases;
  for (auto& [name, circuit] : inputs) {
    std::string label = "m=" + std::to_string(m) + " " + name;
    cases.push_back({std::move(label), [circuit = std::move(circuit), m] {
                       const ScosInstance out = reduce_succinct(circuit);
                       if (out.circuit.variable_count() != 6 * m) {
                         return mismatch("output has " + std::to_string(out.circuit.variable_count()) +
                                         " variables, expected " + std::to_string(6 * m));
                       }
                       const SuccinctLayout layout = succinct_layout(m);
                       const Graph expected = explicit_succinct_graph(materialize(circuit), layout);
                       AdjacencyOracle oracle(out.circuit);
                       const std::uint64_t size = std::uint64_t{1} << (3 * m);
                       for (std::uint64_t u = 0; u < size; ++u) {
                         for (std::uint64_t v = 0; v < size; ++v) {
                           const bool want = expected.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
                           if (oracle(u, v) != want) {
                             return mismatch("adjacency differs at codes " + std::to_string(u) + ", " +
                                             std::to_string(v));
                           }
                         }
                       }
                       return pass(std::to_string(expected.edge_count()) + " edges");
                     }});
  }
  return cases;
}

std::vector<Case> cases_sigma2(const VerifyConfig& config, std::mt19937_64& rng) {
  const int max_p = config.p ? config.p : 3;
  std::vector<Case> cases;
  for (Graph g : suite_graphs(config, rng, static_cast<std::size_t>(config.max_n))) {
    for (int p = 1; p <= max_p; ++p) {
      std::string label = describe(g) + " p=" + std::to_string(p);
      cases.push_back({std::move(label), [g, p] {
                         const bool sigma = sigma2_decide(g, p);
                         const bool direct = decide_cos(CosInstance::generalized(g, p)).yes;
                         if (sigma != direct) {
                           return mismatch(std::string("exists-forall says ") + (sigma ? "YES" : "NO") +
                                           ", decide_cos says " + (direct ? "YES" : "NO"));
                         }
                         return pass(sigma ? "YES" : "NO");
                       }});
    }
  }
  return cases;
}

CaseOutcome run_case(const Case& c) {
  CaseOutcome outcome;
  try {
    outcome = c.run();
  } catch (const ResourceError& e) {
    outcome = {CaseOutcome::Budget, {}, e.what()};
  } catch (const std::exception& e) {
    outcome = {CaseOutcome::Error, {}, e.what()};
  }
  outcome.label = c.label;
  return outcome;
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<Case> cases;
  if (config.kind == "3col-cos") {
    cases = cases_3col(config, rng);
  } else if (config.kind == "4cp-cpos") {
    cases = cases_4cp(config, rng);
  } else if (config.kind == "s3col-scos") {
    cases = cases_succinct(config, rng);
  } else if (config.kind == "sigma2") {
    cases = cases_sigma2(config, rng);
  } else {
    throw DomainError("unknown verification suite '" + config.kind + "'");
  }

  VerifyReport report;
  report.cases.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) report.cases[i] = run_case(cases[i]);
  };
  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& c : report.cases) {
    switch (c.status) {
      case CaseOutcome::Pass:
        ++report.passed;
        break;
      case CaseOutcome::Mismatch:
        ++report.mismatched;
        break;
      case CaseOutcome::Budget:
        ++report.budget;
        break;
      case CaseOutcome::Error:
        ++report.errors;
        break;
    }
  }
  return report;
}

}  // namespace hjump
