#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hjump/graph.hpp"
#include "hjump/problems.hpp"

namespace hjump {

/// Exhaustive k^n check for a proper k-colouring. Independent of the
/// backtracking solver.
bool brute_force_colourable(const Graph& g, int k);

/// Every labelled graph on n vertices (2^(n(n-1)/2) of them), n <= 8.
std::vector<Graph> all_labelled_graphs(std::size_t n);

/// Every proper k-colouring of g, in odometer order.
std::vector<Colouring> all_proper_colourings(const Graph& g, int k);

/// G′ of the succinct reduction built directly as a graph on 2^(3m) codes:
/// G's vertex u sits on code u·0…0, universal vertex j on the one-hot code
/// of coordinate m+j, and catalog vertices on their one-hot coordinates.
Graph explicit_succinct_graph(const Graph& materialized, const SuccinctLayout& layout, int cap = kDefaultEnumerationCap);

struct VerifyConfig {
  std::string kind;  // 3col-cos | 4cp-cpos | s3col-scos | sigma2
  int max_n = 4;
  unsigned m = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  int p = 0;  // 0: the suite's default
  std::uint64_t budget = default_node_budget();
  unsigned jobs = 1;
};

struct CaseOutcome {
  enum Status { Pass, Mismatch, Budget, Error } status = Pass;
  std::string label;
  std::string detail;
};

struct VerifyReport {
  std::vector<CaseOutcome> cases;
  std::size_t passed = 0;
  std::size_t mismatched = 0;
  std::size_t budget = 0;
  std::size_t errors = 0;

  bool all_pass() const noexcept { return mismatched == 0 && budget == 0 && errors == 0; }
};

/// Runs one oracle-equivalence suite. Deterministic for a fixed seed,
/// whatever the job count. Throws DomainError for an unknown kind.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace hjump
