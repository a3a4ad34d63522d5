#include "doctest.h"

#include <limits>

#include "corpus.hpp"
#include "mvarg/graph.hpp"

using namespace mvarg;

TEST_CASE("graph construction keeps declaration order") {
  WeightedGraph g({"B", "A", "C"}, {{"A", "B", -1.0}, {"C", "B", 0.5}});
  CHECK(g.arg_count() == 3);
  CHECK(g.arguments() == std::vector<std::string>{"B", "A", "C"});
  CHECK(g.name(0) == "B");
  CHECK(g.index_of("C") == 2);
  CHECK(g.find("A") == 1);
  CHECK(g.find("Z") == std::nullopt);
  CHECK(corpus::thrown_code([&] { g.index_of("Z"); }) == Errc::UnknownArgument);
  CHECK(g.edges().size() == 2);
  CHECK(g.edges()[0].source == 1);
  CHECK(g.edges()[0].target == 0);
}

TEST_CASE("single argument, no edges") {
  WeightedGraph g({"A"}, {});
  CHECK(g.arg_count() == 1);
  CHECK(g.edges().empty());
  CHECK_FALSE(g.constrained(0));
}

TEST_CASE("construction errors") {
  CHECK(corpus::thrown_code([] { WeightedGraph({"A", "A"}, {}); }) == Errc::DuplicateArgument);
  CHECK(corpus::thrown_code([] { WeightedGraph({"A"}, {{"B", "A", 1.0}}); }) ==
        Errc::UnknownEndpoint);
  CHECK(corpus::thrown_code([] { WeightedGraph({"A"}, {{"A", "B", 1.0}}); }) ==
        Errc::UnknownEndpoint);
  CHECK(corpus::thrown_code([] {
          WeightedGraph({"A", "B"}, {{"A", "B", 1.0}, {"A", "B", -1.0}});
        }) == Errc::DuplicateEdge);
  CHECK(corpus::thrown_code([] { WeightedGraph({"A"}, {{"A", "A", 0.0}}); }) ==
        Errc::ZeroOrNonfiniteWeight);
  CHECK(corpus::thrown_code([] {
          WeightedGraph({"A"}, {{"A", "A", std::numeric_limits<double>::infinity()}});
        }) == Errc::ZeroOrNonfiniteWeight);
  CHECK(corpus::thrown_code([] {
          WeightedGraph({"A"}, {{"A", "A", std::numeric_limits<double>::quiet_NaN()}});
        }) == Errc::ZeroOrNonfiniteWeight);
}

TEST_CASE("adjacency, constrained flags and predecessors") {
  WeightedGraph g({"A", "B", "C"}, {{"B", "A", -1.0}, {"C", "A", 0.5}, {"A", "A", 2.0}});
  CHECK(g.constrained(0));
  CHECK_FALSE(g.constrained(1));
  CHECK(g.incoming(0).size() == 3);
  CHECK(g.incoming(0)[0].source == 1);
  CHECK(g.incoming(0)[1].weight == 0.5);
  CHECK(g.outgoing(1) == std::vector<int>{0});
  CHECK(g.outgoing(0) == std::vector<int>{0});
  // R^-(A) in canonical order, duplicates collapsed.
  CHECK(g.predecessors("A") == std::vector<std::string>{"A", "B", "C"});
  CHECK(g.predecessors("B").empty());
  CHECK(corpus::thrown_code([&] { g.predecessors("Z"); }) == Errc::UnknownArgument);
}

TEST_CASE("graph equality is structural") {
  WeightedGraph a({"A", "B"}, {{"A", "B", 1.5}});
  WeightedGraph b({"A", "B"}, {{"A", "B", 1.5}});
  WeightedGraph c({"A", "B"}, {{"A", "B", 1.0}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("labelling validation and accessors") {
  WeightedGraph g({"A", "B"}, {});
  Labelling s({0, 1}, 2);
  CHECK(s.size() == 2);
  CHECK(s.resolution() == 2);
  CHECK(s.numerator(1) == 1);
  CHECK(s.degree(1) == TruthDegree(1, 2));
  CHECK(s.str(g) == "A=0/2 B=1/2");
  CHECK(corpus::thrown_code([] { Labelling({3}, 2); }) == Errc::BoundOutOfRange);
  CHECK(corpus::thrown_code([] { Labelling({-1}, 2); }) == Errc::BoundOutOfRange);
}

TEST_CASE("labelling order is lexicographic in canonical argument order") {
  Labelling a({0, 2}, 2), b({1, 0}, 2), c({1, 0}, 2);
  CHECK(a < b);
  CHECK(b == c);
  CHECK_FALSE(b < c);
  CHECK(Labelling({0, 0}, 2) < Labelling({0, 1}, 2));
}
