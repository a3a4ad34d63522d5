#include "mvarg/preferential.hpp"

#include <algorithm>
#include <utility>

#include "mvarg/errors.hpp"

namespace mvarg {

std::string GradedImplication::str() const {
  // Rendering through a combined tree keeps a nested -> in the antecedent
  // parenthesized, so the text reparses to the same split.
  std::string out = Formula::impl(antecedent, consequent)->str();
  out += bound_kind == Bound::AtLeast ? " >= " : " <= ";
  out += bound.str();
  return out;
}

Query::Ptr Query::leaf(GradedImplication g) {
  auto q = std::shared_ptr<Query>(new Query());
  q->kind_ = Kind::Leaf;
  q->graded_ = std::move(g);
  return q;
}

Query::Ptr Query::negation(Ptr sub) {
  auto q = std::shared_ptr<Query>(new Query());
  q->kind_ = Kind::Not;
  q->lhs_ = std::move(sub);
  return q;
}

Query::Ptr Query::conjunction(Ptr a, Ptr b) {
  auto q = std::shared_ptr<Query>(new Query());
  q->kind_ = Kind::And;
  q->lhs_ = std::move(a);
  q->rhs_ = std::move(b);
  return q;
}

Query::Ptr Query::disjunction(Ptr a, Ptr b) {
  auto q = std::shared_ptr<Query>(new Query());
  q->kind_ = Kind::Or;
  q->lhs_ = std::move(a);
  q->rhs_ = std::move(b);
  return q;
}

Query::Ptr Query::implication(Ptr a, Ptr b) {
  auto q = std::shared_ptr<Query>(new Query());
  q->kind_ = Kind::Implies;
  q->lhs_ = std::move(a);
  q->rhs_ = std::move(b);
  return q;
}

namespace {

int query_precedence(Query::Kind k) {
  switch (k) {
    case Query::Kind::Not:
      return 4;
    case Query::Kind::And:
      return 3;
    case Query::Kind::Or:
      return 2;
    case Query::Kind::Implies:
      return 1;
    default:
      return 5;
  }
}

void render_query(const Query& q, std::string& out, int parent_prec, bool right_side) {
  int prec = query_precedence(q.kind());
  bool need_parens =
      prec < parent_prec || (prec == parent_prec && prec == 1 && !right_side);
  if (need_parens) out += '(';
  switch (q.kind()) {
    case Query::Kind::Leaf:
      out += '(';
      out += q.graded().str();
      out += ')';
      break;
    case Query::Kind::Not:
      out += "not ";
      render_query(*q.lhs(), out, prec, false);
      break;
    case Query::Kind::And:
      render_query(*q.lhs(), out, prec, false);
      out += " and ";
      render_query(*q.rhs(), out, prec, true);
      break;
    case Query::Kind::Or:
      render_query(*q.lhs(), out, prec, false);
      out += " or ";
      render_query(*q.rhs(), out, prec, true);
      break;
    case Query::Kind::Implies:
      render_query(*q.lhs(), out, prec, false);
      out += " implies ";
      render_query(*q.rhs(), out, prec, true);
      break;
  }
  if (need_parens) out += ')';
}

}  // namespace

std::string Query::str() const {
  std::string out;
  render_query(*this, out, 0, false);
  return out;
}

PreferentialInterpretation::PreferentialInterpretation(const WeightedGraph& graph,
                                                       LabellingSet sigma,
                                                       const LogicSystem& logic)
    : graph_(&graph), sigma_(std::move(sigma)), logic_(&logic) {}

int PreferentialInterpretation::eval_typ_free(std::size_t index, const Formula& f) const {
  return eval_numerator(*graph_, sigma_[index], f, *logic_, nullptr, static_cast<int>(index));
}

bool PreferentialInterpretation::prefers(const Formula& alpha, const Labelling& sigma,
                                         const Labelling& sigma_prime) const {
  if (alpha.contains_typicality())
    throw Error(Errc::TypicalityInPreferenceFormula,
                "preference is induced by T-free formulas only");
  auto i = sigma_.index_of(sigma);
  auto j = sigma_.index_of(sigma_prime);
  if (!i || !j)
    throw Error(Errc::LabellingNotInSigma, "preference compares admitted labellings only");
  return eval_typ_free(*j, alpha) < eval_typ_free(*i, alpha);
}

std::vector<std::size_t> PreferentialInterpretation::preferred_labellings(
    const Formula& alpha) const {
  if (alpha.contains_typicality())
    throw Error(Errc::TypicalityInPreferenceFormula,
                "preference is induced by T-free formulas only");
  std::vector<std::size_t> out;
  if (sigma_.empty()) return out;
  std::vector<int> values(sigma_.size());
  int best = 0;
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    values[i] = eval_typ_free(i, alpha);
    best = std::max(best, values[i]);
  }
  for (std::size_t i = 0; i < sigma_.size(); ++i)
    if (values[i] == best) out.push_back(i);
  return out;
}

TruthDegree PreferentialInterpretation::typicality_value(const Labelling& sigma,
                                                         const Formula& alpha) const {
  auto i = sigma_.index_of(sigma);
  if (!i) throw Error(Errc::LabellingNotInSigma, "labelling is not admitted");
  return typicality_value(*i, alpha);
}

TruthDegree PreferentialInterpretation::typicality_value(std::size_t index,
                                                         const Formula& alpha) const {
  if (index >= sigma_.size())
    throw Error(Errc::LabellingNotInSigma, "labelling index out of range");
  auto preferred = preferred_labellings(alpha);
  bool is_pref = std::binary_search(preferred.begin(), preferred.end(), index);
  return TruthDegree(is_pref ? eval_typ_free(index, alpha) : 0, sigma_.resolution);
}

TypicalityBinding PreferentialInterpretation::bind(const Formula& f) const {
  TypicalityBinding binding;
  f.collect_typ_nodes(binding.nodes_);
  binding.preferred_.resize(binding.nodes_.size());
  binding.max_value_.resize(binding.nodes_.size(), 0);
  for (std::size_t k = 0; k < binding.nodes_.size(); ++k) {
    const Formula& inner = *binding.nodes_[k]->lhs();
    std::vector<int> values(sigma_.size());
    int best = 0;
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
      values[i] = eval_typ_free(i, inner);
      best = std::max(best, values[i]);
    }
    binding.max_value_[k] = best;
    binding.preferred_[k].resize(sigma_.size());
    // A labelling is preferred exactly when it attains the maximum, so the
    // typicality value is `best` there and 0 elsewhere.
    for (std::size_t i = 0; i < sigma_.size(); ++i)
      binding.preferred_[k][i] = values[i] == best ? 1 : 0;
  }
  return binding;
}

int PreferentialInterpretation::eval_bound(const TypicalityBinding& binding, std::size_t index,
                                           const Formula& f) const {
  TypResolver resolver = [&](const Formula& node) -> std::optional<int> {
    for (std::size_t k = 0; k < binding.nodes_.size(); ++k)
      if (binding.nodes_[k] == &node)
        return binding.preferred_[k][index] ? binding.max_value_[k] : 0;
    return std::nullopt;
  };
  return eval_numerator(*graph_, sigma_[index], f, *logic_, &resolver,
                        static_cast<int>(index));
}

int PreferentialInterpretation::eval_in(std::size_t index, const Formula& f) const {
  return eval_bound(bind(f), index, f);
}

TruthDegree PreferentialInterpretation::implication_degree(const Formula& lhs,
                                                           const Formula& rhs) const {
  const int n = sigma_.resolution;
  if (sigma_.empty()) return TruthDegree(n, n);  // empty infimum
  // Sharing one binding works because impl() reuses the child nodes, so T
  // identities are those of lhs and rhs themselves.
  auto combined = Formula::impl(
      std::shared_ptr<const Formula>(&lhs, [](const Formula*) {}),
      std::shared_ptr<const Formula>(&rhs, [](const Formula*) {}));
  auto binding = bind(*combined);
  int best = n;
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    int a = eval_bound(binding, i, lhs);
    int b = eval_bound(binding, i, rhs);
    best = std::min(best, logic_->implication(a, b, n));
  }
  return TruthDegree(best, n);
}

Verdict PreferentialInterpretation::check_graded(const GradedImplication& g) const {
  const int n = sigma_.resolution;
  Verdict v;
  if (g.antecedent->kind() == Formula::Kind::Typ)
    v.preferred_count =
        static_cast<int>(preferred_labellings(*g.antecedent->lhs()).size());
  if (sigma_.empty()) {
    v.empty_sigma = true;
    v.degree = TruthDegree(n, n);
    v.satisfied = g.bound_kind == GradedImplication::Bound::AtLeast
                      ? v.degree.numerator() >= g.bound.numerator()
                      : v.degree.numerator() <= g.bound.numerator();
    return v;
  }
  auto combined = Formula::impl(g.antecedent, g.consequent);
  auto binding = bind(*combined);
  int best = n;
  std::size_t witness = 0;
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    int a = eval_bound(binding, i, *g.antecedent);
    int b = eval_bound(binding, i, *g.consequent);
    int val = logic_->implication(a, b, n);
    if (val < best) {
      best = val;
      witness = i;
    }
  }
  v.degree = TruthDegree(best, n);
  if (g.bound_kind == GradedImplication::Bound::AtLeast) {
    v.satisfied = best >= g.bound.numerator();
    if (!v.satisfied) v.counterexample = sigma_[witness];
  } else {
    v.satisfied = best <= g.bound.numerator();
  }
  return v;
}

QueryResult PreferentialInterpretation::eval_query(const Query& q) const {
  QueryResult result;
  auto walk = [&](auto&& self, const Query& node) -> bool {
    switch (node.kind()) {
      case Query::Kind::Leaf: {
        Verdict v = check_graded(node.graded());
        bool sat = v.satisfied;
        result.leaves.emplace_back(&node.graded(), std::move(v));
        return sat;
      }
      case Query::Kind::Not:
        return !self(self, *node.lhs());
      case Query::Kind::And: {
        bool a = self(self, *node.lhs());
        bool b = self(self, *node.rhs());
        return a && b;
      }
      case Query::Kind::Or: {
        bool a = self(self, *node.lhs());
        bool b = self(self, *node.rhs());
        return a || b;
      }
      default: {
        bool a = self(self, *node.lhs());
        bool b = self(self, *node.rhs());
        return !a || b;
      }
    }
  };
  result.satisfied = walk(walk, q);
  return result;
}

}  // namespace mvarg
