#include "doctest.h"

#include "corpus.hpp"
#include "mvarg/logic.hpp"

using namespace mvarg;

TEST_CASE("lookup by name") {
  CHECK(LogicSystem::by_name("goedel") == &LogicSystem::goedel());
  CHECK(LogicSystem::by_name("lukasiewicz") == &LogicSystem::lukasiewicz());
  CHECK(LogicSystem::by_name("product") == nullptr);
  CHECK(std::string(LogicSystem::goedel().name) == "goedel");
}

TEST_CASE("goedel connectives at n=5") {
  const auto& g = LogicSystem::goedel();
  CHECK(g.tnorm(4, 2, 5) == 2);
  CHECK(g.snorm(4, 2, 5) == 4);
  CHECK(g.implication(4, 2, 5) == 2);  // antecedent exceeds consequent
  CHECK(g.implication(2, 4, 5) == 5);
  CHECK(g.implication(2, 2, 5) == 5);
  CHECK(g.negation(2, 5) == 3);
  CHECK(g.negation(0, 5) == 5);
}

TEST_CASE("lukasiewicz connectives at n=5") {
  const auto& l = LogicSystem::lukasiewicz();
  CHECK(l.tnorm(4, 2, 5) == 1);
  CHECK(l.snorm(4, 2, 5) == 5);
  CHECK(l.implication(4, 2, 5) == 3);
  CHECK(l.implication(2, 4, 5) == 5);
  CHECK(l.negation(2, 5) == 3);
}

TEST_CASE("closure holds exhaustively for both systems") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(closure_check(LogicSystem::goedel(), n));
    CHECK(closure_check(LogicSystem::lukasiewicz(), n));
  }
}

TEST_CASE("algebraic laws, exhaustive on small scales") {
  for (const auto* logic : {&LogicSystem::goedel(), &LogicSystem::lukasiewicz()}) {
    for (int n = 1; n <= 6; ++n) {
      for (int a = 0; a <= n; ++a) {
        CHECK(logic->negation(logic->negation(a, n), n) == a);  // involutive
        CHECK(logic->tnorm(a, n, n) == a);                      // 1 is tnorm identity
        CHECK(logic->snorm(a, 0, n) == a);                      // 0 is snorm identity
        for (int b = 0; b <= n; ++b) {
          CHECK(logic->tnorm(a, b, n) == logic->tnorm(b, a, n));
          CHECK(logic->snorm(a, b, n) == logic->snorm(b, a, n));
          // tnorm + snorm = a + b, the pointwise modularity both systems share
          CHECK(logic->tnorm(a, b, n) + logic->snorm(a, b, n) == a + b);
          CHECK(logic->tnorm(a, b, n) <= a);
          CHECK(a <= logic->snorm(a, b, n));
          // full implication degree exactly when antecedent <= consequent
          CHECK((logic->implication(a, b, n) == n) == (a <= b));
          // residuation: tnorm(a,c) <= b iff c <= (a |> b)
          for (int c = 0; c <= n; ++c)
            CHECK((logic->tnorm(a, c, n) <= b) == (c <= logic->implication(a, b, n)));
        }
      }
    }
  }
}

TEST_CASE("formula evaluation in one labelling") {
  WeightedGraph g({"A", "B"}, {});
  Labelling s({4, 2}, 5);
  const auto& gl = LogicSystem::goedel();
  auto A = Formula::arg("A"), B = Formula::arg("B");

  CHECK(eval_plain(g, s, *Formula::impl(A, B), gl) == TruthDegree(2, 5));
  CHECK(eval_plain(g, s, *Formula::impl(A, B), LogicSystem::lukasiewicz()) ==
        TruthDegree(3, 5));
  CHECK(eval_plain(g, s, *Formula::conj(A, B), gl) == TruthDegree(2, 5));
  CHECK(eval_plain(g, s, *Formula::disj(A, B), gl) == TruthDegree(4, 5));
  CHECK(eval_plain(g, s, *Formula::neg(A), gl) == TruthDegree(1, 5));
  CHECK(eval_plain(g, s, *Formula::top(), gl) == TruthDegree(5, 5));
  CHECK(eval_plain(g, s, *Formula::bot(), gl) == TruthDegree(0, 5));

  Labelling s2({2, 0}, 5);
  CHECK(eval_plain(g, s2, *Formula::conj(A, Formula::neg(A)), gl) == TruthDegree(2, 5));
}

TEST_CASE("label atoms hit exactly their own index") {
  WeightedGraph g({"A"}, {});
  Labelling s({1}, 2);
  const auto& gl = LogicSystem::goedel();
  auto at0 = Formula::label_atom(0);
  CHECK(eval_numerator(g, s, *at0, gl, nullptr, 0) == 2);
  CHECK(eval_numerator(g, s, *at0, gl, nullptr, 1) == 0);
  CHECK(eval_numerator(g, s, *Formula::label_atom(3), gl, nullptr, 3) == 2);
}

TEST_CASE("typicality nodes need a resolver") {
  WeightedGraph g({"A"}, {});
  Labelling s({1}, 1);
  auto t = Formula::typ(Formula::arg("A"));
  CHECK(corpus::thrown_code([&] {
          eval_numerator(g, s, *t, LogicSystem::goedel());
        }) == Errc::MissingTypicalityContext);
  TypResolver resolver = [](const Formula&) { return std::optional<int>(1); };
  CHECK(eval_numerator(g, s, *t, LogicSystem::goedel(), &resolver) == 1);
  TypResolver unbound = [](const Formula&) { return std::optional<int>(); };
  CHECK(corpus::thrown_code([&] {
          eval_numerator(g, s, *t, LogicSystem::goedel(), &unbound);
        }) == Errc::MissingTypicalityContext);
}

TEST_CASE("unknown argument in a formula is rejected at evaluation") {
  WeightedGraph g({"A"}, {});
  Labelling s({0}, 1);
  CHECK(corpus::thrown_code([&] {
          eval_numerator(g, s, *Formula::arg("Z"), LogicSystem::goedel());
        }) == Errc::UnknownArgument);
}

TEST_CASE("pointwise laws lift through random formulas") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 150; ++trial) {
    auto graph = corpus::random_graph(rng);
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    auto labellings = corpus::all_labellings(graph.arg_count(), n);
    auto f = corpus::random_formula(rng, graph, 3);
    auto h = corpus::random_formula(rng, graph, 2);
    const auto& logic = trial % 2 ? LogicSystem::lukasiewicz() : LogicSystem::goedel();
    for (const auto& s : labellings) {
      int vf = eval_numerator(graph, s, *f, logic);
      int vh = eval_numerator(graph, s, *h, logic);
      int vneg = eval_numerator(graph, s, *Formula::neg(f), logic);
      int vand = eval_numerator(graph, s, *Formula::conj(f, h), logic);
      int vor = eval_numerator(graph, s, *Formula::disj(f, h), logic);
      CHECK(vneg == n - vf);          // complementation
      CHECK(vand + vor == vf + vh);   // modularity
      CHECK(vand <= vf);
      CHECK(vf <= vor);
    }
  }
}
