#include "mvarg/formula.hpp"

#include <algorithm>
#include <utility>

#include "mvarg/errors.hpp"

namespace mvarg {

namespace {

// Binding strength for rendering: higher binds tighter.
// Neg > And > Or > Impl. Atoms never need parentheses.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Neg:
      return 4;
    case Formula::Kind::And:
      return 3;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::Impl:
      return 1;
    default:
      return 5;
  }
}

}  // namespace

Formula::Formula(Kind kind, std::string name, int label_index, Ptr lhs, Ptr rhs)
    : kind_(kind),
      name_(std::move(name)),
      label_index_(label_index),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {
  has_typ_ = kind_ == Kind::Typ || (lhs_ && lhs_->has_typ_) || (rhs_ && rhs_->has_typ_);
}

FormulaPtr Formula::arg(std::string name) {
  return Ptr(new Formula(Kind::Arg, std::move(name), -1, nullptr, nullptr));
}

FormulaPtr Formula::top() {
  return Ptr(new Formula(Kind::Top, {}, -1, nullptr, nullptr));
}

FormulaPtr Formula::bot() {
  return Ptr(new Formula(Kind::Bot, {}, -1, nullptr, nullptr));
}

FormulaPtr Formula::neg(Ptr f) {
  return Ptr(new Formula(Kind::Neg, {}, -1, std::move(f), nullptr));
}

FormulaPtr Formula::conj(Ptr a, Ptr b) {
  return Ptr(new Formula(Kind::And, {}, -1, std::move(a), std::move(b)));
}

FormulaPtr Formula::disj(Ptr a, Ptr b) {
  return Ptr(new Formula(Kind::Or, {}, -1, std::move(a), std::move(b)));
}

FormulaPtr Formula::impl(Ptr a, Ptr b) {
  return Ptr(new Formula(Kind::Impl, {}, -1, std::move(a), std::move(b)));
}

FormulaPtr Formula::typ(Ptr f) {
  if (f && f->contains_typicality())
    throw Error(Errc::NestedTypicality, "T may not appear under another T");
  return Ptr(new Formula(Kind::Typ, {}, -1, std::move(f), nullptr));
}

FormulaPtr Formula::label_atom(int index) {
  if (index < 0) throw Error(Errc::LabelIndexOutOfRange, "label index must be >= 0");
  return Ptr(new Formula(Kind::LabelAtom, {}, index, nullptr, nullptr));
}

void Formula::render(std::string& out, int parent_prec, bool right_side) const {
  int prec = precedence(kind_);
  // Impl is right-associative: a -> b -> c means a -> (b -> c), so a left
  // child at equal precedence needs parentheses and a right child does not.
  // & and | parse left-associatively, so there it is the right child that
  // needs them to keep the tree shape through a reparse.
  bool need_parens = prec < parent_prec ||
                     (prec == parent_prec && (prec == 1 ? !right_side : right_side));
  if (need_parens) out += '(';
  switch (kind_) {
    case Kind::Arg:
      out += name_;
      break;
    case Kind::Top:
      out += "true";
      break;
    case Kind::Bot:
      out += "false";
      break;
    case Kind::Neg:
      out += '~';
      lhs_->render(out, prec, false);
      break;
    case Kind::And:
      lhs_->render(out, prec, false);
      out += " & ";
      rhs_->render(out, prec, true);
      break;
    case Kind::Or:
      lhs_->render(out, prec, false);
      out += " | ";
      rhs_->render(out, prec, true);
      break;
    case Kind::Impl:
      lhs_->render(out, prec, false);
      out += " -> ";
      rhs_->render(out, prec, true);
      break;
    case Kind::Typ:
      out += "T(";
      lhs_->render(out, 0, false);
      out += ')';
      break;
    case Kind::LabelAtom:
      out += "label(";
      out += std::to_string(label_index_);
      out += ')';
      break;
  }
  if (need_parens) out += ')';
}

std::string Formula::str() const {
  std::string out;
  render(out, 0, false);
  return out;
}

void Formula::collect_typ_nodes(std::vector<const Formula*>& out) const {
  if (kind_ == Kind::Typ) {
    if (std::find(out.begin(), out.end(), this) == out.end()) out.push_back(this);
    return;  // T cannot nest
  }
  if (lhs_) lhs_->collect_typ_nodes(out);
  if (rhs_) rhs_->collect_typ_nodes(out);
}

void Formula::collect_arg_names(std::vector<std::string>& out) const {
  if (kind_ == Kind::Arg) {
    if (std::find(out.begin(), out.end(), name_) == out.end()) out.push_back(name_);
    return;
  }
  if (lhs_) lhs_->collect_arg_names(out);
  if (rhs_) rhs_->collect_arg_names(out);
}

void Formula::collect_label_indices(std::vector<int>& out) const {
  if (kind_ == Kind::LabelAtom) {
    if (std::find(out.begin(), out.end(), label_index_) == out.end())
      out.push_back(label_index_);
    return;
  }
  if (lhs_) lhs_->collect_label_indices(out);
  if (rhs_) rhs_->collect_label_indices(out);
}

bool Formula::equal(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Kind::Arg:
      return a.name_ == b.name_;
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::LabelAtom:
      return a.label_index_ == b.label_index_;
    case Kind::Neg:
    case Kind::Typ:
      return equal(*a.lhs_, *b.lhs_);
    default:
      return equal(*a.lhs_, *b.lhs_) && equal(*a.rhs_, *b.rhs_);
  }
}

}  // namespace mvarg
