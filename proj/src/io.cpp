#include "hjump/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hjump/error.hpp"

namespace hjump {

std::optional<std::vector<LineReader::Token>> LineReader::next_line() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i > start) tokens.push_back(Token{text.substr(start, i - start), line_, start + 1});
    }
    if (!tokens.empty()) return tokens;
  }
  return std::nullopt;
}

std::vector<LineReader::Token> LineReader::expect_line(const char* what) {
  auto tokens = next_line();
  if (!tokens) throw ParseError(std::string("unexpected end of input, expected ") + what, line_ + 1, 1);
  return *tokens;
}

std::string LineReader::rest() {
  std::ostringstream out;
  out << in_.rdbuf();
  return out.str();
}

std::uint64_t LineReader::to_unsigned(const Token& token, const char* what) {
  std::uint64_t value = 0;
  const char* end = token.text.data() + token.text.size();
  auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
  if (ec != std::errc{} || ptr != end) fail(std::string("expected ") + what + ", got '" + token.text + "'", token);
  return value;
}

void LineReader::fail(const std::string& message, const Token& token) {
  throw ParseError(message, token.line, token.column);
}

namespace {

std::vector<LineReader::Token> fields(LineReader& reader, std::size_t count, const char* what) {
  auto tokens = reader.expect_line(what);
  if (tokens.size() != count) {
    const auto& at = tokens.size() > count ? tokens[count] : tokens.back();
    LineReader::fail(std::string("expected ") + std::to_string(count) + " fields for " + what, at);
  }
  return tokens;
}

// Body of a colouring: n lines "v c".
std::vector<Colour> read_assignment(LineReader& reader, std::size_t n, int k) {
  std::vector<Colour> colours(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto t = fields(reader, 2, "colouring line \"v c\"");
    const auto v = LineReader::to_unsigned(t[0], "vertex");
    const auto c = LineReader::to_unsigned(t[1], "colour");
    if (v >= n) LineReader::fail("vertex " + std::to_string(v) + " out of range", t[0]);
    if (c < 1 || c > static_cast<std::uint64_t>(k)) {
      LineReader::fail("colour " + std::to_string(c) + " outside 1.." + std::to_string(k), t[1]);
    }
    if (colours[v] != 0) LineReader::fail("vertex " + std::to_string(v) + " coloured twice", t[0]);
    colours[v] = static_cast<Colour>(c);
  }
  return colours;
}

int read_palette(const LineReader::Token& token) {
  const auto k = LineReader::to_unsigned(token, "colour count k");
  if (k < 1 || k > 65535) LineReader::fail("colour count k must lie in 1..65535", token);
  return static_cast<int>(k);
}

}  // namespace

Graph read_graph(LineReader& reader) {
  auto header = fields(reader, 2, "graph header \"n m\"");
  const auto n = LineReader::to_unsigned(header[0], "vertex count");
  const auto m = LineReader::to_unsigned(header[1], "edge count");
  if (n > UINT32_MAX) LineReader::fail("vertex count too large", header[0]);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (std::uint64_t i = 0; i < m; ++i) {
    auto t = fields(reader, 2, "edge line \"u v\"");
    const auto u = LineReader::to_unsigned(t[0], "vertex");
    const auto v = LineReader::to_unsigned(t[1], "vertex");
    if (u == v) LineReader::fail("self-loop at vertex " + std::to_string(u), t[0]);
    if (u > v) LineReader::fail("edge endpoints must satisfy u < v", t[0]);
    if (v >= n) LineReader::fail("vertex " + std::to_string(v) + " out of range", t[1]);
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) LineReader::fail("duplicate edge", t[0]);
    edges.push_back(e);
  }
  return Graph(n, edges);
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  return read_graph(reader);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Colouring read_colouring(LineReader& reader) {
  auto header = fields(reader, 2, "colouring header \"n k\"");
  const auto n = LineReader::to_unsigned(header[0], "vertex count");
  const int k = read_palette(header[1]);
  return Colouring(k, read_assignment(reader, n, k));
}

Colouring read_colouring(std::istream& in) {
  LineReader reader(in);
  return read_colouring(reader);
}

void write_colouring(std::ostream& out, const Colouring& c) {
  out << c.size() << ' ' << c.k() << '\n';
  for (Vertex v = 0; v < c.size(); ++v) out << v << ' ' << c[v] << '\n';
}

PathFileSource::PathFileSource(std::istream& in) : reader_(in) {
  auto header = fields(reader_, 3, "path header \"n k t\"");
  n_ = LineReader::to_unsigned(header[0], "vertex count");
  k_ = read_palette(header[1]);
  t_ = LineReader::to_unsigned(header[2], "path length");
}

std::optional<Colouring> PathFileSource::next() {
  if (served_ == t_) {
    if (auto extra = reader_.next_line()) LineReader::fail("trailing data after the declared path length", extra->front());
    return std::nullopt;
  }
  ++served_;
  return Colouring(k_, read_assignment(reader_, n_, k_));
}

void write_path(std::ostream& out, const ReconfigPath& path) {
  const std::size_t n = path.empty() ? 0 : path.steps.front().size();
  out << n << ' ' << path.k << ' ' << path.size() << '\n';
  for (const Colouring& c : path.steps)
    for (Vertex v = 0; v < c.size(); ++v) out << v << ' ' << c[v] << '\n';
}

std::string_view kind_name(const AnyInstance& instance) {
  switch (instance.index()) {
    case 0:
      return "cos";
    case 1:
      return "cpos";
    default:
      return "scos";
  }
}

AnyInstance read_bundle(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.expect_line("bundle header");
  std::map<std::string, LineReader::Token> keys;
  for (const auto& token : header) {
    const auto eq = token.text.find('=');
    if (eq == std::string::npos || eq == 0) LineReader::fail("expected key=value in bundle header", token);
    const std::string key = token.text.substr(0, eq);
    if (key != "kind" && key != "mode" && key != "p") LineReader::fail("unknown header key '" + key + "'", token);
    if (!keys.emplace(key, LineReader::Token{token.text.substr(eq + 1), token.line, token.column + eq + 1}).second) {
      LineReader::fail("repeated header key '" + key + "'", token);
    }
  }
  if (!keys.count("kind")) throw ParseError("bundle header lacks kind=", header.front().line, 1);
  const auto& kind = keys.at("kind");
  Mode mode = Mode::Generalized;
  if (keys.count("mode")) {
    const auto& token = keys.at("mode");
    if (token.text != "faithful" && token.text != "generalized") LineReader::fail("unknown mode", token);
    mode = parse_mode(token.text);
  } else if (kind.text != "scos") {
    throw ParseError("bundle header lacks mode=", header.front().line, 1);
  }
  std::optional<int> p;
  if (keys.count("p")) p = static_cast<int>(LineReader::to_unsigned(keys.at("p"), "integer p"));

  if (kind.text == "scos") {
    const std::size_t offset = reader.line();
    try {
      return ScosInstance{parse_circuit(reader.rest())};
    } catch (const ParseError& e) {
      const std::string message = e.what();
      throw ParseError(message.substr(message.find(": ") + 2), e.line() + offset, e.column());
    }
  }
  if (kind.text != "cos" && kind.text != "cpos") LineReader::fail("unknown kind '" + kind.text + "'", kind);
  if (mode == Mode::Generalized && !p) throw ParseError("generalized bundles need p=", header.front().line, 1);

  Graph g = read_graph(reader);
  const int resolved = p ? *p : param_p(g.vertex_count());
  if (kind.text == "cos") {
    CosInstance instance{std::move(g), resolved, mode};
    instance.validate();
    return instance;
  }
  Colouring alpha = read_colouring(reader);
  Colouring beta = read_colouring(reader);
  CposInstance instance{std::move(g), alpha.with_palette(std::max(alpha.k(), resolved)),
                        beta.with_palette(std::max(beta.k(), resolved)), resolved, mode};
  instance.validate();
  return instance;
}

void write_bundle(std::ostream& out, const AnyInstance& instance) {
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, ScosInstance>) {
          out << "kind=scos";
          if (inst.circuit.m() >= 2) out << " p=" << inst.p();
          out << '\n' << serialize_circuit(inst.circuit);
        } else {
          out << "kind=" << kind_name(instance) << " mode=" << to_string(inst.mode) << " p=" << inst.p << '\n';
          write_graph(out, inst.graph);
          if constexpr (std::is_same_v<T, CposInstance>) {
            write_colouring(out, inst.alpha);
            write_colouring(out, inst.beta);
          }
        }
      },
      instance);
}

namespace {

template <class Artifact>
nlohmann::json artifact_json(const Artifact& artifact, const char* reduction) {
  nlohmann::json j;
  j["reduction"] = reduction;
  j["mode"] = std::string(to_string(artifact.mode));
  j["p"] = artifact.p;
  j["vertex_count"] = artifact.output_graph().vertex_count();
  j["graph"] = artifact.graph_map.image;
  j["clique_k"] = artifact.clique_k;
  j["clique_l"] = artifact.clique_l;
  j["padding"] = artifact.padding;
  auto& catalog = j["catalog"] = nlohmann::json::array();
  for (const auto& map : artifact.catalog_maps) catalog.push_back({{"source", map.source}, {"image", map.image}});
  return j;
}

}  // namespace

std::string provenance_json(const CosReduction& artifact) { return artifact_json(artifact, "3col-cos").dump(2); }
std::string provenance_json(const CposReduction& artifact) { return artifact_json(artifact, "4cp-cpos").dump(2); }

std::string provenance_json(const SuccinctLayout& layout) {
  nlohmann::json j;
  j["reduction"] = "s3col-scos";
  j["m"] = layout.m;
  j["p"] = layout.p;
  j["variables"] = 2 * layout.total;
  // Coordinates are 1-based positions within a 3m-bit vertex code.
  j["original_coordinates"] = {1, layout.m};
  std::vector<unsigned> universal;
  for (unsigned j2 = 1; j2 <= layout.universal; ++j2) universal.push_back(layout.m + j2);
  j["universal_coordinates"] = universal;
  auto& catalog = j["catalog"] = nlohmann::json::array();
  for (std::size_t h = 0; h < layout.catalog_members; ++h) {
    std::vector<unsigned> coords;
    for (int i = 0; i < layout.p; ++i) coords.push_back(layout.catalog_coordinate(h, static_cast<unsigned>(i)));
    catalog.push_back(coords);
  }
  j["padding_coordinates"] = {layout.used + 1, layout.total};
  return j.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace hjump
