#pragma once

#include <functional>
#include <optional>

#include "mvarg/degree.hpp"
#include "mvarg/formula.hpp"
#include "mvarg/graph.hpp"

namespace mvarg {

/// A finitely-valued truth-functional system: the four connective functions
/// on C_n, operating on numerators at resolution n. Both built-in systems
/// are closed on C_n for every n.
struct LogicSystem {
  const char* name;
  int (*tnorm)(int a, int b, int n);
  int (*snorm)(int a, int b, int n);
  int (*implication)(int a, int b, int n);
  int (*negation)(int a, int n);

  /// min / max / (a<=b ? 1 : b) / 1-a
  static const LogicSystem& goedel();
  /// max(0,a+b-1) / min(1,a+b) / min(1,1-a+b) / 1-a
  static const LogicSystem& lukasiewicz();

  static const LogicSystem* by_name(const std::string& name);  // nullptr if unknown
};

/// Supplies the degree of a T(...) node for the labelling being evaluated;
/// nullopt means the node is not covered (MissingTypicalityContext).
using TypResolver = std::function<std::optional<int>(const Formula&)>;

/// Truth-functional evaluation of a formula in one labelling. T nodes are
/// resolved through `typ`; label(i) evaluates to 1 iff i == label_index.
int eval_numerator(const WeightedGraph& graph, const Labelling& sigma, const Formula& f,
                   const LogicSystem& logic, const TypResolver* typ = nullptr,
                   int label_index = -1);

TruthDegree eval_plain(const WeightedGraph& graph, const Labelling& sigma, const Formula& f,
                       const LogicSystem& logic, const TypResolver* typ = nullptr,
                       int label_index = -1);

/// True iff all four functions map C_n x C_n (resp. C_n) into C_n,
/// verified exhaustively.
bool closure_check(const LogicSystem& logic, int n);

}  // namespace mvarg
