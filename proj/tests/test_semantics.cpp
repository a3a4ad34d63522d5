#include "doctest.h"

#include <algorithm>

#include "corpus.hpp"
#include "mvarg/semantics.hpp"

using namespace mvarg;

namespace {

PhiSpec sigmoid_spec() { return PhiSpec(SigmoidNearest{}); }

}  // namespace

TEST_CASE("weighted sum of one argument") {
  // in-edges: B attacks A with -1, C supports A with 0.5
  WeightedGraph g({"A", "B", "C"}, {{"B", "A", -1.0}, {"C", "A", 0.5}});
  Labelling s({0, 5, 4}, 5);  // B=1, C=4/5
  auto w = weight_of(g, s, "A");
  REQUIRE(w.has_value());
  CHECK(*w == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK(*w == -0.6);  // the sum is exact in binary here
  CHECK_FALSE(weight_of(g, s, "B").has_value());  // no predecessors
  CHECK_FALSE(weight_of(g, s, "C").has_value());
  CHECK(weight_of(g, s, 0) == w);
}

TEST_CASE("class predicates on a single attack") {
  WeightedGraph g({"A", "B"}, {{"A", "B", -1.0}});
  auto spec = sigmoid_spec();
  // W(B) = -sigma(A); only B is constrained
  CHECK(is_phi_coherent(g, Labelling({0, 1}, 1), spec));   // W=0, phi(0)=1
  CHECK_FALSE(is_phi_coherent(g, Labelling({0, 0}, 1), spec));
  CHECK(is_phi_coherent(g, Labelling({1, 0}, 1), spec));   // W=-1, phi=0
  CHECK_FALSE(is_phi_coherent(g, Labelling({1, 1}, 1), spec));
  // single constrained argument: no pairs, both hold
  CHECK(is_coherent(g, Labelling({1, 1}, 1)));
  CHECK(is_faithful(g, Labelling({1, 1}, 1)));
}

TEST_CASE("coherent is strictly stronger than faithful") {
  WeightedGraph g({"A", "B", "C"}, {{"A", "B", 1.0}, {"A", "C", 2.0}});
  // W(B) = sigma(A), W(C) = 2 sigma(A)
  Labelling flat({1, 0, 0}, 1);  // W(B)=1 < W(C)=2 but sigma(B)=sigma(C)
  CHECK(is_faithful(g, flat));
  CHECK_FALSE(is_coherent(g, flat));
  Labelling ordered({1, 0, 1}, 1);
  CHECK(is_coherent(g, ordered));
  CHECK(is_faithful(g, ordered));
  CHECK(satisfies(g, ordered, SemanticsChoice::coherent()));
  CHECK(satisfies(g, flat, SemanticsChoice::faithful()));
  CHECK_FALSE(satisfies(g, flat, SemanticsChoice::coherent()));
}

TEST_CASE("edgeless graphs admit everything") {
  WeightedGraph g(corpus::arg_names(3), {});
  for (const auto& s : corpus::all_labellings(3, 2)) {
    CHECK(is_coherent(g, s));
    CHECK(is_faithful(g, s));
    CHECK(is_phi_coherent(g, s, sigmoid_spec()));
  }
  for (int k : {0, 1, 2}) {
    auto set = enumerate_labellings(g, 2, corpus::semantics_by_index(k));
    CHECK(set.size() == 27);  // (n+1)^3
  }
}

TEST_CASE("search order puts predecessors first") {
  // chain C -> B -> A plus isolated D
  WeightedGraph chain({"A", "B", "C", "D"}, {{"C", "B", 1.0}, {"B", "A", 1.0}});
  CHECK(search_order(chain) == std::vector<int>{3, 2, 1, 0});

  // two-cycle {A,B} feeding C: the component keeps declaration order
  WeightedGraph cyc({"A", "B", "C"},
                    {{"A", "B", -1.0}, {"B", "A", -1.0}, {"B", "C", 1.0}});
  CHECK(search_order(cyc) == std::vector<int>{0, 1, 2});

  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = corpus::random_graph(rng, 6, 10);
    auto order = search_order(g);
    REQUIRE(order.size() == g.arg_count());
    std::vector<int> pos(g.arg_count());
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == static_cast<int>(i));
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    // an edge may only point backwards inside a shared SCC
    std::size_t k = g.arg_count();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (const auto& e : g.edges()) reach[e.source][e.target] = true;
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (reach[i][m] && reach[m][j]) reach[i][j] = true;
    for (const auto& e : g.edges()) {
      if (e.source == e.target) continue;
      bool same_scc = reach[e.source][e.target] && reach[e.target][e.source];
      if (!same_scc) CHECK(pos[e.source] < pos[e.target]);
    }
  }
}

TEST_CASE("frozen enumerations under the sigmoid default") {
  auto phi = SemanticsChoice::phi_coherent(sigmoid_spec());

  WeightedGraph attack({"A", "B"}, {{"A", "B", -1.0}});
  auto s1 = enumerate_labellings(attack, 1, phi);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == Labelling({0, 1}, 1));
  CHECK(s1[1] == Labelling({1, 0}, 1));

  WeightedGraph self_attack({"A"}, {{"A", "A", -10.0}});
  CHECK(enumerate_labellings(self_attack, 1, phi).empty());

  auto support = corpus::support_sigma();
  REQUIRE(support.size() == 3);
  CHECK(support[0] == Labelling({0, 1}, 2));
  CHECK(support[1] == Labelling({1, 1}, 2));
  CHECK(support[2] == Labelling({2, 2}, 2));
}

TEST_CASE("step thresholds on a self-loop") {
  WeightedGraph g({"A"}, {{"A", "A", 1.0}});
  auto step0 = SemanticsChoice::phi_coherent(PhiSpec(StepThreshold{0.0}));
  auto got = enumerate_labellings(g, 1, step0);
  REQUIRE(got.size() == 2);  // W=0 is not > 0, so (0) holds; (1) gives W=1>0
  CHECK(got[0] == Labelling({0}, 1));
  CHECK(got[1] == Labelling({1}, 1));

  auto step6 = SemanticsChoice::phi_coherent(PhiSpec(StepThreshold{6.0}));
  auto high = enumerate_labellings(g, 1, step6);
  REQUIRE(high.size() == 1);
  CHECK(high[0] == Labelling({0}, 1));
}

TEST_CASE("canonical index lookup") {
  auto sigma = corpus::support_sigma();
  CHECK(sigma.index_of(Labelling({1, 1}, 2)) == std::size_t{1});
  CHECK_FALSE(sigma.index_of(Labelling({2, 0}, 2)).has_value());
}

TEST_CASE("propagation search agrees with the exhaustive filter") {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = corpus::random_graph(rng);
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k : {0, 1, 2}) {
      auto sem = corpus::semantics_by_index(k);
      auto fast = enumerate_labellings(g, n, sem);
      auto slow = brute_force_labellings(g, n, sem);
      CHECK(fast.labellings == slow.labellings);
      // members really satisfy the class predicate, in sorted order
      CHECK(std::is_sorted(fast.labellings.begin(), fast.labellings.end()));
      for (const auto& s : fast.labellings) CHECK(satisfies(g, s, sem));
    }
  }
}

TEST_CASE("coherent implies faithful on arbitrary assignments") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = corpus::random_graph(rng);
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (const auto& s : corpus::all_labellings(g.arg_count(), n)) {
      if (is_coherent(g, s)) CHECK(is_faithful(g, s));
      if (is_phi_coherent(g, s, sigmoid_spec())) CHECK(is_faithful(g, s));
    }
  }
}

TEST_CASE("repeated enumeration is identical") {
  std::mt19937 rng(1010);
  auto g = corpus::random_graph(rng, 4, 6);
  auto a = enumerate_labellings(g, 3, corpus::semantics_by_index(2));
  auto b = enumerate_labellings(g, 3, corpus::semantics_by_index(2));
  CHECK(a.labellings == b.labellings);
}

TEST_CASE("candidate caps") {
  CHECK(candidate_count(1, 3, 8) == 8);
  CHECK_FALSE(candidate_count(1, 3, 7).has_value());
  CHECK(candidate_count(4, 4, 1000) == 625);
  CHECK_FALSE(candidate_count(100, 10, 10'000'000).has_value());

  WeightedGraph g(corpus::arg_names(4), {});
  CHECK(corpus::thrown_code([&] {
          brute_force_labellings(g, 9, corpus::semantics_by_index(0), 9999);
        }) == Errc::SizeLimitExceeded);  // 10^4 candidates > 9999
}
