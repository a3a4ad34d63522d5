#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvarg/logic.hpp"
#include "mvarg/parser.hpp"
#include "mvarg/probability.hpp"
#include "mvarg/semantics.hpp"

namespace mvarg {

/// One reasoning run: a graph, a resolution, a semantics, a logic, a
/// distribution mode, and an ordered list of statements.
struct Session {
  WeightedGraph graph;
  int resolution = 1;
  SemanticsChoice semantics;
  const LogicSystem* logic = &LogicSystem::goedel();
  std::optional<std::string> distribution_text;  // nullopt = uniform
  std::vector<Statement> statements;
  long long cap = 10'000'000;

  Session(WeightedGraph g, int n, SemanticsChoice sem)
      : graph(std::move(g)), resolution(n), semantics(std::move(sem)) {}
};

struct LeafRecord {
  std::string implication;  // rendered graded implication
  bool satisfied = false;
  std::string degree;  // "k/n"
  std::optional<int> preferred_count;
  std::optional<std::vector<std::pair<std::string, std::string>>> counterexample;
};

struct StatementRecord {
  std::string kind;  // check | degree | prob | list_labellings
  std::string input_text;
  std::optional<bool> satisfied;
  std::optional<std::string> degree;
  std::optional<int> preferred_count;
  std::optional<std::vector<std::pair<std::string, std::string>>> counterexample;
  std::optional<double> probability;
  std::vector<std::string> labellings;  // list_labellings rows
  std::vector<std::string> weights;     // weighted sums per row, audit aid
  std::vector<LeafRecord> leaves;       // check leaves
  std::vector<std::string> warnings;
};

/// Deterministic, byte-stable report: identical sessions render to
/// identical text and identical JSON.
struct Report {
  int resolution = 1;
  std::string semantics;
  std::string logic;
  std::string distribution;
  std::size_t sigma_count = 0;
  std::vector<std::string> warnings;
  std::vector<StatementRecord> statements;

  std::string to_text() const;
  std::string to_json() const;
};

/// Enumerate Sigma once, evaluate every statement against it. Empty Sigma
/// yields warnings, not failure.
Report run_session(const Session& session);

}  // namespace mvarg
