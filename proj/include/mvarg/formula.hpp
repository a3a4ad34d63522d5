#pragma once

#include <memory>
#include <string>
#include <vector>

namespace mvarg {

/// Immutable formula tree over arguments: connectives, constants, the
/// (unnested) typicality operator T, and labelling-indicator atoms label(i).
class Formula {
 public:
  enum class Kind { Arg, Top, Bot, Neg, And, Or, Impl, Typ, LabelAtom };
  using Ptr = std::shared_ptr<const Formula>;

  static Ptr arg(std::string name);
  static Ptr top();
  static Ptr bot();
  static Ptr neg(Ptr f);
  static Ptr conj(Ptr a, Ptr b);
  static Ptr disj(Ptr a, Ptr b);
  static Ptr impl(Ptr a, Ptr b);
  static Ptr typ(Ptr f);  // throws NestedTypicality if f contains T
  static Ptr label_atom(int index);

  Kind kind() const { return kind_; }
  const std::string& arg_name() const { return name_; }
  int label_index() const { return label_index_; }
  const Ptr& lhs() const { return lhs_; }  // unary child or left child
  const Ptr& rhs() const { return rhs_; }

  bool contains_typicality() const { return has_typ_; }

  /// Parseable rendering using the query DSL symbols (~ & | -> T() label()).
  std::string str() const;

  /// Distinct T nodes (by identity), in left-to-right discovery order.
  void collect_typ_nodes(std::vector<const Formula*>& out) const;
  void collect_arg_names(std::vector<std::string>& out) const;
  void collect_label_indices(std::vector<int>& out) const;

  /// Structural equality.
  static bool equal(const Formula& a, const Formula& b);

 private:
  Formula(Kind kind, std::string name, int label_index, Ptr lhs, Ptr rhs);
  void render(std::string& out, int parent_prec, bool right_side) const;

  Kind kind_;
  std::string name_;
  int label_index_ = -1;
  Ptr lhs_;
  Ptr rhs_;
  bool has_typ_ = false;
};

using FormulaPtr = Formula::Ptr;

}  // namespace mvarg
