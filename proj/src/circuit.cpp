#include "hjump/circuit.hpp"

#include <set>
#include <string>
#include <utility>

#include "hjump/error.hpp"

namespace hjump {

Circuit::Circuit(unsigned m, std::vector<Gate> gates, NodeId output)
    : m_(m), gates_(std::move(gates)), output_(output) {
  if (m_ == 0) throw CircuitError("a circuit needs at least one variable pair (m >= 1)");
  if (output_ >= gates_.size()) throw CircuitError("output node does not exist");
  for (std::size_t id = 0; id < gates_.size(); ++id) {
    const Gate& g = gates_[id];
    const std::string where = "node " + std::to_string(id);
    for (NodeId in : g.inputs)
      if (in >= gates_.size()) throw CircuitError(where + " reads a missing node");
    switch (g.kind) {
      case GateKind::Const:
        if (!g.inputs.empty() || g.value > 1) throw CircuitError(where + ": malformed constant");
        break;
      case GateKind::Var:
        if (!g.inputs.empty()) throw CircuitError(where + ": variables have no inputs");
        if (g.value < 1 || g.value > variable_count()) {
          throw CircuitError("variable index out of range: " + std::to_string(g.value) + " not in 1.." +
                             std::to_string(variable_count()));
        }
        break;
      case GateKind::Not:
        if (g.inputs.size() != 1) throw CircuitError(where + ": NOT takes exactly one input");
        break;
      case GateKind::And:
      case GateKind::Or:
        break;
    }
  }

  // Iterative three-colour DFS over every node: finds cycles anywhere and
  // yields a post-order for the nodes reachable from the output.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> state(gates_.size(), kWhite);
  auto visit = [&](NodeId root, bool record) {
    std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
    state[root] = kGrey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& inputs = gates_[node].inputs;
      if (next < inputs.size()) {
        const NodeId child = inputs[next++];
        if (state[child] == kGrey) throw CircuitError("cycle detected through node " + std::to_string(child));
        if (state[child] == kWhite) {
          state[child] = kGrey;
          stack.emplace_back(child, 0);
        }
      } else {
        state[node] = kBlack;
        if (record) schedule_.push_back(node);
        stack.pop_back();
      }
    }
  };
  visit(output_, true);
  for (NodeId id = 0; id < gates_.size(); ++id)
    if (state[id] == kWhite) visit(id, false);
}

std::size_t Circuit::size() const {
  std::size_t total = 0;
  for (NodeId id : schedule_) {
    const Gate& g = gates_[id];
    if (g.kind != GateKind::Var) ++total;
    for (NodeId in : g.inputs) total += gates_[in].kind == GateKind::Var;
  }
  if (gates_[output_].kind == GateKind::Var) ++total;
  return total;
}

bool CircuitEvaluator::operator()(std::span<const std::uint8_t> assignment) {
  if (assignment.size() != circuit_.variable_count()) {
    throw DomainError("assignment has " + std::to_string(assignment.size()) + " bits, circuit expects " +
                      std::to_string(circuit_.variable_count()));
  }
  const auto& gates = circuit_.gates();
  for (NodeId id : circuit_.schedule()) {
    const Gate& g = gates[id];
    std::uint8_t v = 0;
    switch (g.kind) {
      case GateKind::Const:
        v = static_cast<std::uint8_t>(g.value);
        break;
      case GateKind::Var:
        v = assignment[g.value - 1] ? 1 : 0;
        break;
      case GateKind::Not:
        v = !values_[g.inputs[0]];
        break;
      case GateKind::And:
        v = 1;
        for (NodeId in : g.inputs)
          if (!values_[in]) {
            v = 0;
            break;
          }
        break;
      case GateKind::Or:
        for (NodeId in : g.inputs)
          if (values_[in]) {
            v = 1;
            break;
          }
        break;
    }
    values_[id] = v;
  }
  return values_[circuit_.output()] != 0;
}

bool Circuit::eval(std::span<const std::uint8_t> assignment) const {
  CircuitEvaluator evaluator(*this);
  return evaluator(assignment);
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.m_ != b.m_) return false;
  std::set<std::pair<NodeId, NodeId>> equal;
  std::function<bool(NodeId, NodeId)> same = [&](NodeId x, NodeId y) {
    if (equal.count({x, y})) return true;
    const Gate& gx = a.gates_[x];
    const Gate& gy = b.gates_[y];
    if (gx.kind != gy.kind || gx.value != gy.value || gx.inputs.size() != gy.inputs.size()) return false;
    for (std::size_t i = 0; i < gx.inputs.size(); ++i)
      if (!same(gx.inputs[i], gy.inputs[i])) return false;
    equal.insert({x, y});
    return true;
  };
  return same(a.output_, b.output_);
}

CircuitBuilder::CircuitBuilder(unsigned m) : m_(m) {
  if (m == 0) throw CircuitError("a circuit needs at least one variable pair (m >= 1)");
}

NodeId CircuitBuilder::intern(Gate gate) {
  auto it = index_.find(gate);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<NodeId>(gates_.size());
  index_.emplace(gate, id);
  gates_.push_back(std::move(gate));
  return id;
}

NodeId CircuitBuilder::constant(bool value) { return intern(Gate{GateKind::Const, value ? 1u : 0u, {}}); }

NodeId CircuitBuilder::var(unsigned index) {
  if (index < 1 || index > 2 * m_) {
    throw CircuitError("variable index out of range: " + std::to_string(index) + " not in 1.." +
                       std::to_string(2 * m_));
  }
  return intern(Gate{GateKind::Var, index, {}});
}

NodeId CircuitBuilder::negate(NodeId input) { return intern(Gate{GateKind::Not, 0, {input}}); }

NodeId CircuitBuilder::conjunction(std::vector<NodeId> inputs) {
  if (inputs.empty()) return constant(true);
  return intern(Gate{GateKind::And, 0, std::move(inputs)});
}

NodeId CircuitBuilder::disjunction(std::vector<NodeId> inputs) {
  if (inputs.empty()) return constant(false);
  return intern(Gate{GateKind::Or, 0, std::move(inputs)});
}

NodeId CircuitBuilder::import(const Circuit& circuit, const std::function<unsigned(unsigned)>& rename) {
  std::vector<NodeId> mapped(circuit.gates().size());
  for (NodeId id : circuit.schedule()) {
    const Gate& g = circuit.gate(id);
    switch (g.kind) {
      case GateKind::Const:
        mapped[id] = constant(g.value != 0);
        break;
      case GateKind::Var:
        mapped[id] = var(rename(g.value));
        break;
      case GateKind::Not:
        mapped[id] = negate(mapped[g.inputs[0]]);
        break;
      case GateKind::And:
      case GateKind::Or: {
        std::vector<NodeId> inputs;
        inputs.reserve(g.inputs.size());
        for (NodeId in : g.inputs) inputs.push_back(mapped[in]);
        mapped[id] = g.kind == GateKind::And ? conjunction(std::move(inputs)) : disjunction(std::move(inputs));
        break;
      }
    }
  }
  return mapped[circuit.output()];
}

Circuit CircuitBuilder::build(NodeId output) const { return Circuit(m_, gates_, output); }

}  // namespace hjump
