#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvarg/logic.hpp"
#include "mvarg/semantics.hpp"

namespace mvarg {

/// alpha -> beta >= l  or  alpha -> beta <= u. Sides may contain unnested T.
struct GradedImplication {
  enum class Bound { AtLeast, AtMost };

  FormulaPtr antecedent;
  FormulaPtr consequent;
  Bound bound_kind = Bound::AtLeast;
  TruthDegree bound;

  std::string str() const;
};

/// Boolean combination of graded implications; connectives are two-valued.
class Query {
 public:
  enum class Kind { Leaf, Not, And, Or, Implies };
  using Ptr = std::shared_ptr<const Query>;

  static Ptr leaf(GradedImplication g);
  static Ptr negation(Ptr q);
  static Ptr conjunction(Ptr a, Ptr b);
  static Ptr disjunction(Ptr a, Ptr b);
  static Ptr implication(Ptr a, Ptr b);

  Kind kind() const { return kind_; }
  const GradedImplication& graded() const { return *graded_; }
  const Ptr& lhs() const { return lhs_; }
  const Ptr& rhs() const { return rhs_; }

  std::string str() const;

 private:
  Query() = default;
  Kind kind_ = Kind::Leaf;
  std::optional<GradedImplication> graded_;
  Ptr lhs_;
  Ptr rhs_;
};

struct Verdict {
  bool satisfied = false;
  TruthDegree degree;  // the implication degree
  std::optional<int> preferred_count;        // when the antecedent is T(gamma)
  std::optional<Labelling> counterexample;   // failed AtLeast leaves only
  bool empty_sigma = false;
};

struct QueryResult {
  bool satisfied = false;
  /// Leaves in left-to-right order, with their verdicts.
  std::vector<std::pair<const GradedImplication*, Verdict>> leaves;
};

/// Preferred sets of the distinct T nodes of one formula, precomputed over
/// Sigma so evaluation per labelling is O(|formula|).
class TypicalityBinding {
 public:
  const std::vector<const Formula*>& nodes() const { return nodes_; }

 private:
  friend class PreferentialInterpretation;
  std::vector<const Formula*> nodes_;
  std::vector<std::vector<char>> preferred_;  // per node, flag per sigma index
  std::vector<int> max_value_;                // per node, max inner degree numerator
};

/// The pair (C_n, Sigma) with a designated logic: preference relations are
/// induced per formula by the degree it takes in each labelling.
class PreferentialInterpretation {
 public:
  PreferentialInterpretation(const WeightedGraph& graph, LabellingSet sigma,
                             const LogicSystem& logic);

  const WeightedGraph& graph() const { return *graph_; }
  const LabellingSet& sigma() const { return sigma_; }
  const LogicSystem& logic() const { return *logic_; }
  int resolution() const { return sigma_.resolution; }

  /// sigma <_alpha sigma' iff sigma'(alpha) < sigma(alpha). alpha must be T-free.
  bool prefers(const Formula& alpha, const Labelling& sigma, const Labelling& sigma_prime) const;

  /// min_{<alpha}(Sigma), computed as the argmax of alpha's degree
  /// (equivalent because C_n is totally ordered). Canonical indices.
  std::vector<std::size_t> preferred_labellings(const Formula& alpha) const;

  /// sigma(T(alpha)): sigma(alpha) when sigma is preferred for alpha, else 0.
  TruthDegree typicality_value(const Labelling& sigma, const Formula& alpha) const;
  TruthDegree typicality_value(std::size_t index, const Formula& alpha) const;

  /// (lhs -> rhs)^I = min over Sigma of sigma(lhs) |> sigma(rhs);
  /// 1 when Sigma is empty (empty infimum).
  TruthDegree implication_degree(const Formula& lhs, const Formula& rhs) const;

  Verdict check_graded(const GradedImplication& g) const;
  QueryResult eval_query(const Query& q) const;

  /// Precompute preferred sets for every T node of f.
  TypicalityBinding bind(const Formula& f) const;
  /// Degree numerator of f in the index-th labelling, T nodes resolved
  /// through the binding, label(i) against the canonical index.
  int eval_bound(const TypicalityBinding& binding, std::size_t index, const Formula& f) const;
  /// Convenience: bind + eval in one call.
  int eval_in(std::size_t index, const Formula& f) const;

 private:
  int eval_typ_free(std::size_t index, const Formula& f) const;

  const WeightedGraph* graph_;
  LabellingSet sigma_;
  const LogicSystem* logic_;
};

}  // namespace mvarg
