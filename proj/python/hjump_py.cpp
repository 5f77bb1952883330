#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hjump/error.hpp"
#include "hjump/io.hpp"
#include "hjump/problems.hpp"
#include "hjump/subgraph.hpp"
#include "hjump/verify.hpp"

namespace py = pybind11;
using namespace hjump;

namespace {

Colouring make_colouring(int k, const std::vector<Colour>& colours) { return Colouring(k, colours); }

py::dict decision_dict(const Decision& d) {
  py::dict out;
  out["yes"] = d.yes;
  out["colouring"] = d.colouring ? py::cast(std::vector<Colour>(d.colouring->colours().begin(), d.colouring->colours().end()))
                                 : py::none();
  out["forbidden"] = d.forbidden ? py::cast(*d.forbidden) : py::none();
  if (d.path) {
    py::list steps;
    for (const Colouring& c : d.path->steps) steps.append(std::vector<Colour>(c.colours().begin(), c.colours().end()));
    out["path"] = steps;
  } else {
    out["path"] = py::none();
  }
  return out;
}

SolveOptions options(std::optional<std::uint64_t> budget) {
  SolveOptions o;
  if (budget) o.node_budget = *budget;
  return o;
}

}  // namespace

PYBIND11_MODULE(_hjump, m) {
  m.doc() = "Colouring-or-subgraph problems, reductions and brute-force checks";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_static("complete", &Graph::complete)
      .def_static("cycle", &Graph::cycle)
      .def_static("path", &Graph::path)
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges)";
      });

  m.def("are_isomorphic", &are_isomorphic);
  m.def("complement", &complement);
  m.def("canonical_code", &canonical_code);
  m.def("enumerate_graphs", [](int p) { return enumerate_graphs(p).members; }, py::arg("p"));
  m.def("contains_induced", [](const Graph& g, const Graph& h) -> std::optional<std::vector<Vertex>> {
    if (auto map = contains_induced(g, h)) return map->image;
    return std::nullopt;
  });
  m.def("find_forbidden", [](const Graph& g, int p) { return find_forbidden(g, p); });

  m.def("param_p", &param_p);
  m.def("is_proper", [](const Graph& g, int k, const std::vector<Colour>& c) { return is_proper(g, make_colouring(k, c)); });
  m.def("find_k_colouring", [](const Graph& g, int k) -> std::optional<std::vector<Colour>> {
    if (auto c = find_k_colouring(g, k)) return std::vector<Colour>(c->colours().begin(), c->colours().end());
    return std::nullopt;
  });

  m.def("path_exists",
        [](const Graph& g, int k, const std::vector<Colour>& a, const std::vector<Colour>& b,
           std::optional<std::uint64_t> budget) {
          return path_exists(g, k, make_colouring(k, a), make_colouring(k, b),
                             budget ? *budget : default_node_budget());
        },
        py::arg("graph"), py::arg("k"), py::arg("alpha"), py::arg("beta"), py::arg("budget") = py::none());
  m.def("frozen_vertices", [](const Graph& g, int k, const std::vector<Colour>& c) {
    return frozen_vertices(g, k, make_colouring(k, c));
  });
  m.def("validate_path", [](const Graph& g, int k, const std::vector<Colour>& a, const std::vector<Colour>& b,
                            const std::vector<std::vector<Colour>>& steps) {
    std::vector<Colouring> items;
    for (const auto& s : steps) items.push_back(make_colouring(k, s));
    VectorSource source(std::move(items));
    const PathVerdict v = validate_path_streaming(g, k, make_colouring(k, a), make_colouring(k, b), source);
    return py::make_tuple(v.valid, v.reason);
  });

  m.def("decide_cos",
        [](const Graph& g, int p) { return decision_dict(decide_cos(CosInstance::generalized(g, p))); },
        py::arg("graph"), py::arg("p"));
  m.def("decide_cpos",
        [](const Graph& g, int p, const std::vector<Colour>& a, const std::vector<Colour>& b,
           std::optional<std::uint64_t> budget) {
          return decision_dict(decide_cpos(
              CposInstance::generalized(g, make_colouring(p, a), make_colouring(p, b), p), options(budget)));
        },
        py::arg("graph"), py::arg("p"), py::arg("alpha"), py::arg("beta"), py::arg("budget") = py::none());
  m.def("decide_scos", [](const std::string& circuit) {
    return decision_dict(decide_scos(ScosInstance{parse_circuit(circuit)}));
  });
  m.def("sigma2_decide", &sigma2_decide);
  m.def("hereditary_fast_decide", [](const Graph& g, int p, const Graph& forbidden) {
    const FastDecision d = hereditary_fast_decide(CosInstance::generalized(g, p), forbidden);
    return py::make_tuple(d.yes, d.delegated);
  });

  m.def("reduce_3col",
        [](const Graph& g, int p) {
          const CosReduction r = reduce_3col(g, Mode::Generalized, p);
          return py::make_tuple(r.output_graph(), provenance_json(r));
        },
        py::arg("graph"), py::arg("p"));
  m.def("reduce_3col_faithful", [](const Graph& g) {
    const CosReduction r = reduce_3col(g, Mode::Faithful);
    return py::make_tuple(r.output_graph(), r.p);
  });
  m.def("reduce_4cp",
        [](const Graph& g, const std::vector<Colour>& a, const std::vector<Colour>& b, int p) {
          const CposReduction r = reduce_4cp(g, make_colouring(4, a), make_colouring(4, b), Mode::Generalized, p);
          auto colours = [](const Colouring& c) { return std::vector<Colour>(c.colours().begin(), c.colours().end()); };
          return py::make_tuple(r.output_graph(), colours(r.instance.alpha), colours(r.instance.beta));
        },
        py::arg("graph"), py::arg("alpha"), py::arg("beta"), py::arg("p"));
  m.def("reduce_succinct", [](const std::string& circuit) {
    return serialize_circuit(reduce_succinct(parse_circuit(circuit)).circuit);
  });

  m.def("encode_longhand", [](const Graph& g) { return serialize_circuit(encode_longhand(g)); });
  m.def("materialize", [](const std::string& circuit) { return materialize(parse_circuit(circuit)); });
  m.def("circuit_size", [](const std::string& circuit) { return parse_circuit(circuit).size(); });
  m.def("eval_circuit", [](const std::string& circuit, const std::vector<std::uint8_t>& bits) {
    return parse_circuit(circuit).eval(bits);
  });

  m.def("read_graph", [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  });
  m.def("write_graph", [](const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
  });

  m.def("verify",
        [](const std::string& kind, int max_n, unsigned m_, std::size_t samples, std::uint64_t seed) {
          VerifyConfig config;
          config.kind = kind;
          config.max_n = max_n;
          config.m = m_;
          config.samples = samples;
          config.seed = seed;
          py::gil_scoped_release release;
          const VerifyReport r = run_verification(config);
          py::gil_scoped_acquire acquire;
          py::dict out;
          out["cases"] = r.cases.size();
          out["passed"] = r.passed;
          out["mismatched"] = r.mismatched;
          out["budget"] = r.budget;
          out["errors"] = r.errors;
          return out;
        },
        py::arg("kind"), py::arg("max_n") = 4, py::arg("m") = 2, py::arg("samples") = 0, py::arg("seed") = 1);
}
