#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvarg/degree.hpp"

namespace mvarg {

/// An edge as written by the user, endpoints by name.
struct EdgeSpec {
  std::string source;
  std::string target;
  double weight = 0.0;
};

struct InEdge {
  int source;
  double weight;
};

/// Immutable weighted directed graph. Negative weight = attack,
/// positive = support. Argument order is declaration order and is the
/// canonical order used for labellings everywhere.
class WeightedGraph {
 public:
  struct Edge {
    int source;
    int target;
    double weight;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  WeightedGraph(std::vector<std::string> arguments, const std::vector<EdgeSpec>& edges);

  std::size_t arg_count() const { return arguments_.size(); }
  const std::vector<std::string>& arguments() const { return arguments_; }
  const std::string& name(int index) const { return arguments_.at(index); }
  const std::vector<Edge>& edges() const { return edges_; }

  int index_of(const std::string& name) const;  // throws UnknownArgument
  std::optional<int> find(const std::string& name) const;

  /// In-edges of `target`, in edge declaration order.
  const std::vector<InEdge>& incoming(int target) const { return incoming_.at(target); }
  /// Distinct successor indices of `source`, in edge declaration order.
  const std::vector<int>& outgoing(int source) const { return outgoing_.at(source); }

  bool constrained(int index) const { return !incoming_.at(index).empty(); }

  /// R^-(a): the sources of edges into `a`, in canonical order.
  std::vector<std::string> predecessors(const std::string& name) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.arguments_ == b.arguments_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> arguments_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<InEdge>> incoming_;
  std::vector<std::vector<int>> outgoing_;
};

/// Total assignment of a degree to every argument of a graph, stored as
/// numerators at one shared resolution, in canonical argument order.
/// sigma(top)=1 and sigma(bot)=0 by definition and are not stored.
class Labelling {
 public:
  Labelling(std::vector<int> numerators, int resolution);

  std::size_t size() const { return numerators_.size(); }
  int resolution() const { return resolution_; }
  int numerator(std::size_t i) const { return numerators_.at(i); }
  TruthDegree degree(std::size_t i) const { return TruthDegree(numerators_.at(i), resolution_); }
  const std::vector<int>& numerators() const { return numerators_; }

  /// "A=0/2 B=1/2" in canonical order.
  std::string str(const WeightedGraph& graph) const;

  friend bool operator==(const Labelling& a, const Labelling& b) {
    return a.resolution_ == b.resolution_ && a.numerators_ == b.numerators_;
  }
  /// Lexicographic by canonical argument order, degree ascending.
  friend std::strong_ordering operator<=>(const Labelling& a, const Labelling& b) {
    if (auto c = a.numerators_ <=> b.numerators_; c != 0) return c;
    return a.resolution_ <=> b.resolution_;
  }

 private:
  std::vector<int> numerators_;
  int resolution_;
};

}  // namespace mvarg
