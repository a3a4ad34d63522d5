#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mvarg/graph.hpp"
#include "mvarg/phi.hpp"
#include "mvarg/preferential.hpp"

namespace mvarg {

/// Result of parsing the graph DSL: the validated graph plus per-argument
/// phi overrides (the default phi comes from the session).
struct GraphFile {
  WeightedGraph graph;
  std::map<std::string, PhiFunction> phi_overrides;
};

/// Graph DSL: `#` comments; `arg <name>`; `edge <src> <dst> <weight>`;
/// `phi <arg> sigmoid | step <t> | table <x0>:<v0> ...`.
/// n is the session resolution, needed to validate table values.
GraphFile parse_graph(const std::string& text, int n);

/// Inverse of parse_graph, canonical order, round-trip exact.
std::string serialize_graph(const WeightedGraph& graph,
                            const std::map<std::string, PhiFunction>& phi_overrides, int n);

struct CheckStatement {
  Query::Ptr query;
  std::string text;
};
struct DegreeStatement {
  FormulaPtr lhs;
  FormulaPtr rhs;
  std::string text;
};
struct ProbStatement {
  FormulaPtr event;
  FormulaPtr given;  // null when unconditional
  std::string text;
};
struct ListLabellingsStatement {
  std::string text;
};

using Statement =
    std::variant<CheckStatement, DegreeStatement, ProbStatement, ListLabellingsStatement>;

const std::string& statement_text(const Statement& s);

/// Query DSL, one statement per line:
///   check <query>            query := graded implications under and/or/not/implies
///   degree <formula> -> <formula>
///   prob <formula> [given <formula>]
///   list_labellings
std::vector<Statement> parse_queries(const std::string& text, const WeightedGraph& graph, int n);

/// Formula grammar alone (tests, tools). Precedence ~ > & > | > ->,
/// right-associative ->.
FormulaPtr parse_formula(const std::string& text, const WeightedGraph& graph);

/// A degree bound: `k/m` or a decimal, exactly representable in C_n or
/// BoundOutOfRange. Exposed for reuse and tests.
int parse_bound_numerator(const std::string& text, int n);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double value);

}  // namespace mvarg
