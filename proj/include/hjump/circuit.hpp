#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hjump {

enum class GateKind : std::uint8_t { Const, Var, Not, And, Or };

using NodeId = std::uint32_t;

/// One node of a circuit DAG. `value` holds the constant (0/1) for Const and
/// the 1-based variable index for Var.
struct Gate {
  GateKind kind = GateKind::Const;
  std::uint32_t value = 0;
  std::vector<NodeId> inputs;

  friend auto operator<=>(const Gate&, const Gate&) = default;
};

/// Boolean circuit φ(x₁..x_m, y₁..y_m) over 2m variables. Variables 1..m are
/// the x block, m+1..2m the y block.
///
/// Size is the number of non-variable nodes reachable from the output
/// (constants and NOT count as gates) plus the number of variable
/// occurrences, i.e. references to variable nodes, counting an output that
/// is itself a variable once.
class Circuit {
 public:
  /// Validates arity, variable range and acyclicity. Gates may be listed in
  /// any order. Throws CircuitError.
  Circuit(unsigned m, std::vector<Gate> gates, NodeId output);

  unsigned m() const noexcept { return m_; }
  unsigned variable_count() const noexcept { return 2 * m_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  NodeId output() const noexcept { return output_; }
  const Gate& gate(NodeId id) const { return gates_.at(id); }

  std::size_t size() const;

  /// Reachable nodes, inputs before the gates that read them.
  const std::vector<NodeId>& schedule() const noexcept { return schedule_; }

  /// Evaluates under `assignment` (one 0/1 byte per variable, x then y).
  /// Throws DomainError on a length mismatch.
  bool eval(std::span<const std::uint8_t> assignment) const;

  /// Structural equality of the expressions below the outputs (DAG layout and
  /// unreachable nodes are ignored).
  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  unsigned m_;
  std::vector<Gate> gates_;
  NodeId output_;
  std::vector<NodeId> schedule_;
};

/// Reusable evaluation scratch space for hot loops.
class CircuitEvaluator {
 public:
  explicit CircuitEvaluator(const Circuit& circuit) : circuit_(circuit), values_(circuit.gates().size()) {}
  bool operator()(std::span<const std::uint8_t> assignment);

 private:
  const Circuit& circuit_;
  std::vector<std::uint8_t> values_;
};

/// Builds circuits with structural sharing: requesting an identical node twice
/// returns the same id. An empty conjunction becomes the constant true and an
/// empty disjunction the constant false.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(unsigned m);

  unsigned m() const noexcept { return m_; }
  NodeId constant(bool value);
  NodeId var(unsigned index);
  NodeId negate(NodeId input);
  NodeId conjunction(std::vector<NodeId> inputs);
  NodeId disjunction(std::vector<NodeId> inputs);

  /// Copies the reachable part of `circuit`, renaming variable i to
  /// `rename(i)`, and returns the id of its output.
  NodeId import(const Circuit& circuit, const std::function<unsigned(unsigned)>& rename);

  Circuit build(NodeId output) const;

 private:
  NodeId intern(Gate gate);

  unsigned m_;
  std::vector<Gate> gates_;
  std::map<Gate, NodeId> index_;
};

/// Parses the parenthesized prefix DSL:
///   (vars N) (out EXPR)
///   EXPR := (and EXPR...) | (or EXPR...) | (not EXPR) | (var i) | true | false
/// N must be even and positive. Throws ParseError with line and column.
Circuit parse_circuit(std::string_view text);

/// Normalized text: "(vars N)\n(out EXPR)\n" with single spaces.
std::string serialize_circuit(const Circuit& circuit);

}  // namespace hjump
