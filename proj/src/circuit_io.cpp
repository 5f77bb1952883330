#include <cctype>
#include <charconv>
#include <string>

#include "hjump/circuit.hpp"
#include "hjump/error.hpp"

namespace hjump {

namespace {

struct Token {
  enum Kind { Open, Close, Atom, End } kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t line = line_, column = column_;
    if (pos_ == text_.size()) return {Token::End, {}, line, column};
    const char c = text_[pos_];
    if (c == '(' || c == ')') {
      advance();
      return {c == '(' ? Token::Open : Token::Close, text_.substr(pos_ - 1, 1), line, column};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      advance();
    }
    return {Token::Atom, text_.substr(start, pos_ - start), line, column};
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { look_ = lexer_.next(); }

  Circuit parse() {
    expect(Token::Open, "'('");
    expect_atom("vars");
    const Token count = take();
    const unsigned long vars = parse_number(count, "variable count");
    if (vars == 0 || vars % 2 != 0) fail("variable count must be a positive even number", count);
    expect(Token::Close, "')'");

    CircuitBuilder builder(static_cast<unsigned>(vars / 2));
    expect(Token::Open, "'('");
    expect_atom("out");
    const NodeId output = expression(builder);
    expect(Token::Close, "')'");
    if (look_.kind != Token::End) fail("unexpected text after (out ...)", look_);
    return builder.build(output);
  }

 private:
  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError("syntax error: " + message, at.line, at.column);
  }

  Token take() {
    Token t = look_;
    look_ = lexer_.next();
    return t;
  }

  void expect(Token::Kind kind, const char* what) {
    if (look_.kind != kind) fail(std::string("expected ") + what, look_);
    take();
  }

  void expect_atom(std::string_view word) {
    if (look_.kind != Token::Atom || look_.text != word) fail("expected '" + std::string(word) + "'", look_);
    take();
  }

  unsigned long parse_number(const Token& t, const char* what) const {
    unsigned long value = 0;
    if (t.kind != Token::Atom) fail(std::string("expected ") + what, t);
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || end != t.text.data() + t.text.size()) fail(std::string("expected ") + what, t);
    return value;
  }

  NodeId expression(CircuitBuilder& builder) {
    if (look_.kind == Token::Atom) {
      const Token t = take();
      if (t.text == "true") return builder.constant(true);
      if (t.text == "false") return builder.constant(false);
      fail("unknown atom '" + std::string(t.text) + "'", t);
    }
    if (look_.kind != Token::Open) fail("expected an expression", look_);
    take();
    const Token head = take();
    if (head.kind != Token::Atom) fail("expected an operator", head);
    NodeId result = 0;
    if (head.text == "var") {
      const Token index = take();
      const unsigned long i = parse_number(index, "variable index");
      if (i < 1 || i > 2ul * builder.m()) {
        throw ParseError("variable index out of range: " + std::to_string(i) + " not in 1.." +
                             std::to_string(2 * builder.m()),
                         index.line, index.column);
      }
      result = builder.var(static_cast<unsigned>(i));
    } else if (head.text == "not") {
      result = builder.negate(expression(builder));
    } else if (head.text == "and" || head.text == "or") {
      std::vector<NodeId> inputs;
      while (look_.kind != Token::Close) {
        if (look_.kind == Token::End) fail("unterminated expression", look_);
        inputs.push_back(expression(builder));
      }
      // "(and)" and "(or)" collapse to their identity constants.
      result = head.text == "and" ? builder.conjunction(std::move(inputs)) : builder.disjunction(std::move(inputs));
    } else {
      fail("unknown operator '" + std::string(head.text) + "'", head);
    }
    expect(Token::Close, "')'");
    return result;
  }

  Lexer lexer_;
  Token look_{Token::End, {}, 1, 1};
};

void write_expression(const Circuit& c, NodeId id, std::string& out) {
  const Gate& g = c.gate(id);
  switch (g.kind) {
    case GateKind::Const:
      out += g.value ? "true" : "false";
      return;
    case GateKind::Var:
      out += "(var " + std::to_string(g.value) + ")";
      return;
    case GateKind::Not:
      out += "(not ";
      write_expression(c, g.inputs[0], out);
      out += ")";
      return;
    case GateKind::And:
    case GateKind::Or:
      if (g.inputs.empty()) {
        out += g.kind == GateKind::And ? "true" : "false";
        return;
      }
      out += g.kind == GateKind::And ? "(and" : "(or";
      for (NodeId in : g.inputs) {
        out += ' ';
        write_expression(c, in, out);
      }
      out += ")";
      return;
  }
}

}  // namespace

Circuit parse_circuit(std::string_view text) { return Parser(text).parse(); }

std::string serialize_circuit(const Circuit& circuit) {
  std::string out = "(vars " + std::to_string(circuit.variable_count()) + ")\n(out ";
  write_expression(circuit, circuit.output(), out);
  out += ")\n";
  return out;
}

}  // namespace hjump
