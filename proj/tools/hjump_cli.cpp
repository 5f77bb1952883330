// hjump: solve, reduce, verify and inspect the colouring-or-subgraph problems.
//
// Exit codes: 0 decision reached or all checks passed, 1 usage or input
// error, 2 resource cap or search budget exhausted, 3 verification mismatch.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hjump/error.hpp"
#include "hjump/io.hpp"
#include "hjump/problems.hpp"
#include "hjump/verify.hpp"

namespace fs = std::filesystem;
using namespace hjump;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitMismatch = 3;

struct Options {
  std::string kind;
  std::string input;
  std::string alpha;
  std::string beta;
  std::string path;
  std::string output;
  std::string bits;
  std::string mode = "generalized";
  int p = 0;
  int max_n = 0;
  unsigned m = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  unsigned jobs = 1;
  bool witness = false;
  bool quiet = false;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return in;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

SolveOptions solve_options(const Options& o) {
  SolveOptions options;
  if (o.budget) options.node_budget = o.budget;
  return options;
}

int cmd_solve(const Options& o) {
  std::ifstream in = open_input(o.input);
  const AnyInstance instance = read_bundle(in);
  if (kind_name(instance) != o.kind) {
    throw DomainError("bundle holds a " + std::string(kind_name(instance)) + " instance, not " + o.kind);
  }
  const SolveOptions options = solve_options(o);
  const Decision decision = std::visit(
      [&](const auto& inst) -> Decision {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, CosInstance>) return decide_cos(inst, options);
        else if constexpr (std::is_same_v<T, CposInstance>) return decide_cpos(inst, options);
        else return decide_scos(inst, options);
      },
      instance);

  std::cout << (decision.yes ? "YES" : "NO") << '\n';
  if (o.witness) {
    if (decision.colouring) {
      std::cout << "colouring\n";
      write_colouring(std::cout, *decision.colouring);
    } else if (decision.forbidden) {
      std::cout << "forbidden\n";
      write_graph(std::cout, *decision.forbidden);
    } else if (decision.path) {
      std::cout << "path\n";
      write_path(std::cout, *decision.path);
    }
  }
  return 0;
}

int cmd_reduce(const Options& o) {
  const Mode mode = parse_mode(o.mode);
  std::optional<int> p;
  if (o.p) p = o.p;
  std::ostringstream bundle;
  std::string provenance;

  if (o.kind == "3col-cos") {
    std::ifstream in = open_input(o.input);
    const CosReduction artifact = reduce_3col(read_graph(in), mode, p);
    write_bundle(bundle, artifact.instance);
    provenance = provenance_json(artifact);
  } else if (o.kind == "4cp-cpos") {
    std::ifstream in = open_input(o.input);
    LineReader reader(in);
    const Graph g = read_graph(reader);
    const Colouring alpha = read_colouring(reader);
    const Colouring beta = read_colouring(reader);
    const CposReduction artifact = reduce_4cp(g, alpha.with_palette(4), beta.with_palette(4), mode, p);
    write_bundle(bundle, artifact.instance);
    provenance = provenance_json(artifact);
  } else if (o.kind == "s3col-scos") {
    const Circuit circuit = parse_circuit(read_text_file(o.input));
    write_bundle(bundle, reduce_succinct(circuit));
    provenance = provenance_json(succinct_layout(circuit.m()));
  } else {
    throw DomainError("unknown reduction '" + o.kind + "'");
  }

  write_output(o.output, bundle.str());
  if (!o.output.empty() && o.output != "-") write_output(o.output + ".provenance.json", provenance + "\n");
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyConfig config;
  config.kind = o.kind;
  config.max_n = o.max_n;
  if (config.max_n == 0) config.max_n = o.kind == "4cp-cpos" ? 3 : o.kind == "3col-cos" ? 6 : 5;
  config.m = o.m;
  config.samples = o.samples;
  config.seed = o.seed;
  config.p = o.p;
  if (o.budget) config.budget = o.budget;
  config.jobs = o.jobs;

  const VerifyReport report = run_verification(config);
  for (const auto& c : report.cases) {
    static constexpr const char* kStatus[] = {"PASS", "MISMATCH", "BUDGET", "ERROR"};
    if (o.quiet && c.status == CaseOutcome::Pass) continue;
    std::cout << kStatus[c.status] << ' ' << c.label;
    if (!c.detail.empty()) std::cout << " : " << c.detail;
    std::cout << '\n';
  }
  std::cout << "summary " << o.kind << ": " << report.cases.size() << " cases, " << report.passed << " passed, "
            << report.mismatched << " mismatched, " << report.budget << " budget-exhausted, " << report.errors
            << " errors\n";
  if (report.mismatched || report.errors) return kExitMismatch;
  if (report.budget) return kExitResource;
  return 0;
}

int cmd_enumerate(const Options& o) {
  const GraphCatalog& catalog = enumerate_graphs(o.p);
  const fs::path dir = o.output.empty() ? fs::path("catalog-p" + std::to_string(o.p)) : fs::path(o.output);
  fs::create_directories(dir);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    std::ofstream out(dir / ("H" + std::to_string(i + 1) + ".graph"));
    if (!out) throw DomainError("cannot write into " + dir.string());
    write_graph(out, catalog.members[i]);
  }
  std::cout << catalog.size() << " graphs on " << o.p << " vertices written to " << dir.string() << '\n';
  return 0;
}

int cmd_circuit(const std::string& action, const Options& o) {
  if (action == "encode") {
    std::ifstream in = open_input(o.input);
    write_output(o.output, serialize_circuit(encode_longhand(read_graph(in))));
  } else if (action == "materialize") {
    std::ostringstream out;
    write_graph(out, materialize(parse_circuit(read_text_file(o.input))));
    write_output(o.output, out.str());
  } else {
    const Circuit circuit = parse_circuit(read_text_file(o.input));
    if (o.bits.size() != circuit.variable_count()) {
      throw DomainError("expected " + std::to_string(circuit.variable_count()) + " assignment bits");
    }
    std::vector<std::uint8_t> assignment;
    for (char ch : o.bits) {
      if (ch != '0' && ch != '1') throw DomainError("assignment bits must be 0 or 1");
      assignment.push_back(ch == '1');
    }
    std::cout << (circuit.eval(assignment) ? 1 : 0) << '\n';
  }
  return 0;
}

Colouring load_colouring(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_colouring(in);
}

int cmd_recon(const std::string& action, const Options& o) {
  std::ifstream graph_in = open_input(o.input);
  const Graph g = read_graph(graph_in);
  const std::uint64_t budget = o.budget ? o.budget : default_node_budget();

  if (action == "frozen") {
    const Colouring c = load_colouring(o.alpha);
    const auto frozen = frozen_vertices(g, c.k(), c);
    for (std::size_t i = 0; i < frozen.size(); ++i) std::cout << (i ? " " : "") << frozen[i];
    std::cout << '\n';
    return 0;
  }

  const Colouring alpha = load_colouring(o.alpha);
  const Colouring beta = load_colouring(o.beta);
  if (alpha.k() != beta.k()) throw DomainError("alpha and beta declare different colour counts");
  const int k = alpha.k();

  if (action == "path-exists") {
    const auto path = find_path(g, k, alpha, beta, budget);
    std::cout << (path ? "YES" : "NO") << '\n';
    if (path && o.witness) write_path(std::cout, *path);
    return 0;
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  if (!o.path.empty() && o.path != "-") {
    file = open_input(o.path);
    in = &file;
  }
  PathFileSource source(*in);
  if (source.vertex_count() != g.vertex_count() || source.k() != k) {
    throw DomainError("path header does not match the graph and colourings");
  }
  const PathVerdict verdict = validate_path_streaming(g, k, alpha, beta, source);
  if (verdict) {
    std::cout << "VALID length " << verdict.length << '\n';
  } else {
    std::cout << "INVALID " << verdict.reason << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colouring-or-subgraph decision problems, reductions and oracle checks"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Decide an instance bundle");
  solve->add_option("kind", o.kind, "cos | cpos | scos")->required()->check(CLI::IsMember({"cos", "cpos", "scos"}));
  solve->add_option("bundle", o.input, "Instance bundle")->required();
  solve->add_flag("--witness", o.witness, "Print the witness after the verdict");
  solve->add_option("--budget", o.budget, "Reconfiguration search node budget");

  auto* reduce = app.add_subcommand("reduce", "Build a reduced instance bundle");
  reduce->add_option("kind", o.kind, "3col-cos | 4cp-cpos | s3col-scos")
      ->required()
      ->check(CLI::IsMember({"3col-cos", "4cp-cpos", "s3col-scos"}));
  reduce->add_option("input", o.input, "Graph, graph+alpha+beta, or circuit file")->required();
  reduce->add_option("--mode", o.mode, "faithful | generalized")
      ->check(CLI::IsMember({"faithful", "generalized"}));
  reduce->add_option("--p", o.p, "Explicit parameter p");
  reduce->add_option("-o,--output", o.output, "Bundle path; the provenance sidecar goes next to it");

  auto* verify = app.add_subcommand("verify", "Run an oracle-equivalence suite");
  verify->add_option("kind", o.kind, "3col-cos | 4cp-cpos | s3col-scos | sigma2")
      ->required()
      ->check(CLI::IsMember({"3col-cos", "4cp-cpos", "s3col-scos", "sigma2"}));
  verify->add_option("--max-n", o.max_n, "Largest exhaustive graph order");
  verify->add_option("--m", o.m, "Circuit width for s3col-scos");
  verify->add_option("--samples", o.samples, "Random instances on top of the exhaustive ones");
  verify->add_option("--seed", o.seed, "Seed for the sampled instances");
  verify->add_option("--p", o.p, "Parameter p (largest p for sigma2)");
  verify->add_option("--budget", o.budget, "Reconfiguration search node budget");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--quiet", o.quiet, "Print only failing cases and the summary");

  auto* enumerate = app.add_subcommand("enumerate", "Write one graph file per isomorphism class on p vertices");
  enumerate->add_option("--p", o.p, "Number of vertices")->required();
  enumerate->add_option("--out", o.output, "Output directory (default catalog-p<p>)");

  auto* circuit = app.add_subcommand("circuit", "Circuit utilities");
  circuit->require_subcommand(1);
  auto* encode = circuit->add_subcommand("encode", "Longhand circuit of a graph");
  encode->add_option("graph", o.input)->required();
  encode->add_option("-o,--output", o.output);
  auto* materialize_cmd = circuit->add_subcommand("materialize", "Graph on 2^m vertices defined by a circuit");
  materialize_cmd->add_option("circuit", o.input)->required();
  materialize_cmd->add_option("-o,--output", o.output);
  auto* eval = circuit->add_subcommand("eval", "Evaluate a circuit on an assignment");
  eval->add_option("circuit", o.input)->required();
  eval->add_option("bits", o.bits, "2m characters of 0/1, x block then y block")->required();

  auto* recon = app.add_subcommand("recon", "Reconfiguration utilities");
  recon->require_subcommand(1);
  auto* exists = recon->add_subcommand("path-exists", "Is beta reachable from alpha?");
  exists->add_option("graph", o.input)->required();
  exists->add_option("alpha", o.alpha)->required();
  exists->add_option("beta", o.beta)->required();
  exists->add_option("--budget", o.budget, "Node budget");
  exists->add_flag("--witness", o.witness, "Print a shortest path");
  auto* validate = recon->add_subcommand("validate-path", "Check a path file streamed from a file or stdin");
  validate->add_option("graph", o.input)->required();
  validate->add_option("alpha", o.alpha)->required();
  validate->add_option("beta", o.beta)->required();
  validate->add_option("path", o.path, "Path file, or - for stdin");
  auto* frozen = recon->add_subcommand("frozen", "List frozen vertices of a colouring");
  frozen->add_option("graph", o.input)->required();
  frozen->add_option("colouring", o.alpha)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*reduce) return cmd_reduce(o);
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*circuit) return cmd_circuit(*encode ? "encode" : *materialize_cmd ? "materialize" : "eval", o);
    if (*recon) return cmd_recon(*exists ? "path-exists" : *validate ? "validate-path" : "frozen", o);
  } catch (const ResourceError& e) {
    std::cerr << "hjump: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "hjump: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
