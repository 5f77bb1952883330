#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hjump/colouring.hpp"
#include "hjump/graph.hpp"
#include "hjump/problems.hpp"
#include "hjump/reconfig.hpp"

namespace hjump {

/// Line-oriented tokenizer shared by the text formats. Blank lines are
/// skipped; every token remembers its line and column for error messages.
class LineReader {
 public:
  struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
  };

  explicit LineReader(std::istream& in) : in_(in) {}

  /// Tokens of the next non-blank line, or nullopt at end of input.
  std::optional<std::vector<Token>> next_line();
  /// Like next_line but throws ParseError at end of input.
  std::vector<Token> expect_line(const char* what);
  /// Raw text of the rest of the input.
  std::string rest();

  std::size_t line() const noexcept { return line_; }

  static std::uint64_t to_unsigned(const Token& token, const char* what);
  [[noreturn]] static void fail(const std::string& message, const Token& token);

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

// Graph format: "n m", then m lines "u v" with 0 <= u < v < n. Duplicate
// edges and self-loops are parse errors.
Graph read_graph(LineReader& reader);
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Colouring format: "n k", then n lines "v c" (0-indexed v, 1 <= c <= k),
// each vertex exactly once.
Colouring read_colouring(LineReader& reader);
Colouring read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const Colouring& c);

/// Path format: "n k t", then t colouring bodies of n lines "v c" each.
/// Blocks are parsed one at a time as they are requested.
class PathFileSource final : public ColouringSource {
 public:
  explicit PathFileSource(std::istream& in);

  std::size_t vertex_count() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t declared_length() const noexcept { return t_; }

  std::optional<Colouring> next() override;

 private:
  LineReader reader_;
  std::size_t n_ = 0;
  int k_ = 1;
  std::size_t t_ = 0;
  std::size_t served_ = 0;
};

void write_path(std::ostream& out, const ReconfigPath& path);

/// Instance bundle: a header line "kind=cos|cpos|scos mode=faithful|generalized p=<int>"
/// followed by the instance body. cos: a graph. cpos: a graph, then α and β
/// in colouring format. scos: a circuit in the DSL (p is ignored on read
/// and written as the instance's own parameter). In faithful mode p may be
/// omitted and is derived.
AnyInstance read_bundle(std::istream& in);
void write_bundle(std::ostream& out, const AnyInstance& instance);

std::string_view kind_name(const AnyInstance& instance);

/// JSON sidecar listing every vertex map of a reduction.
std::string provenance_json(const CosReduction& artifact);
std::string provenance_json(const CposReduction& artifact);
std::string provenance_json(const SuccinctLayout& layout);

std::string read_text_file(const std::string& path);

}  // namespace hjump
