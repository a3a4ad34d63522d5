#include "mvarg/logic.hpp"

#include <algorithm>

#include "mvarg/errors.hpp"

namespace mvarg {

namespace {

int g_tnorm(int a, int b, int) { return std::min(a, b); }
int g_snorm(int a, int b, int) { return std::max(a, b); }
int g_impl(int a, int b, int n) { return a <= b ? n : b; }
int g_neg(int a, int n) { return n - a; }

int l_tnorm(int a, int b, int n) { return std::max(0, a + b - n); }
int l_snorm(int a, int b, int n) { return std::min(n, a + b); }
int l_impl(int a, int b, int n) { return std::min(n, n - a + b); }
int l_neg(int a, int n) { return n - a; }

}  // namespace

const LogicSystem& LogicSystem::goedel() {
  static const LogicSystem sys{"goedel", g_tnorm, g_snorm, g_impl, g_neg};
  return sys;
}

const LogicSystem& LogicSystem::lukasiewicz() {
  static const LogicSystem sys{"lukasiewicz", l_tnorm, l_snorm, l_impl, l_neg};
  return sys;
}

const LogicSystem* LogicSystem::by_name(const std::string& name) {
  if (name == "goedel") return &goedel();
  if (name == "lukasiewicz") return &lukasiewicz();
  return nullptr;
}

int eval_numerator(const WeightedGraph& graph, const Labelling& sigma, const Formula& f,
                   const LogicSystem& logic, const TypResolver* typ, int label_index) {
  const int n = sigma.resolution();
  switch (f.kind()) {
    case Formula::Kind::Arg:
      return sigma.numerator(graph.index_of(f.arg_name()));
    case Formula::Kind::Top:
      return n;
    case Formula::Kind::Bot:
      return 0;
    case Formula::Kind::Neg:
      return logic.negation(eval_numerator(graph, sigma, *f.lhs(), logic, typ, label_index), n);
    case Formula::Kind::And:
      return logic.tnorm(eval_numerator(graph, sigma, *f.lhs(), logic, typ, label_index),
                         eval_numerator(graph, sigma, *f.rhs(), logic, typ, label_index), n);
    case Formula::Kind::Or:
      return logic.snorm(eval_numerator(graph, sigma, *f.lhs(), logic, typ, label_index),
                         eval_numerator(graph, sigma, *f.rhs(), logic, typ, label_index), n);
    case Formula::Kind::Impl:
      return logic.implication(eval_numerator(graph, sigma, *f.lhs(), logic, typ, label_index),
                               eval_numerator(graph, sigma, *f.rhs(), logic, typ, label_index),
                               n);
    case Formula::Kind::Typ: {
      if (typ) {
        if (auto v = (*typ)(f)) return *v;
      }
      throw Error(Errc::MissingTypicalityContext,
                  "T(...) requires a preferential interpretation to evaluate");
    }
    case Formula::Kind::LabelAtom:
      return f.label_index() == label_index ? n : 0;
  }
  throw Error(Errc::SyntaxError, "unreachable formula kind");
}

TruthDegree eval_plain(const WeightedGraph& graph, const Labelling& sigma, const Formula& f,
                       const LogicSystem& logic, const TypResolver* typ, int label_index) {
  return TruthDegree(eval_numerator(graph, sigma, f, logic, typ, label_index),
                     sigma.resolution());
}

bool closure_check(const LogicSystem& logic, int n) {
  auto in_range = [n](int v) { return v >= 0 && v <= n; };
  for (int a = 0; a <= n; ++a) {
    if (!in_range(logic.negation(a, n))) return false;
    for (int b = 0; b <= n; ++b) {
      if (!in_range(logic.tnorm(a, b, n))) return false;
      if (!in_range(logic.snorm(a, b, n))) return false;
      if (!in_range(logic.implication(a, b, n))) return false;
    }
  }
  return true;
}

}  // namespace mvarg
