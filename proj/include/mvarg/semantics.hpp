#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvarg/graph.hpp"
#include "mvarg/phi.hpp"

namespace mvarg {

struct SemanticsChoice {
  enum class Kind { Coherent, Faithful, PhiCoherent };

  Kind kind = Kind::PhiCoherent;
  PhiSpec phi;  // meaningful for PhiCoherent only

  static SemanticsChoice coherent() { return {Kind::Coherent, PhiSpec{}}; }
  static SemanticsChoice faithful() { return {Kind::Faithful, PhiSpec{}}; }
  static SemanticsChoice phi_coherent(PhiSpec spec) {
    return {Kind::PhiCoherent, std::move(spec)};
  }

  const char* name() const;
};

/// The admitted labellings of a graph under one semantics, in canonical
/// order (lexicographic by canonical argument order, degree ascending).
struct LabellingSet {
  std::vector<Labelling> labellings;
  SemanticsChoice semantics;
  int resolution = 1;

  std::size_t size() const { return labellings.size(); }
  bool empty() const { return labellings.empty(); }
  const Labelling& operator[](std::size_t i) const { return labellings.at(i); }

  /// Canonical index of sigma, by binary search; nullopt if absent.
  std::optional<std::size_t> index_of(const Labelling& sigma) const;
};

/// W^G_sigma(a): sum of weight * sigma(source) over in-edges of `a`, with
/// degrees taken as rationals k/n. nullopt iff `a` has no predecessors.
std::optional<double> weight_of(const WeightedGraph& graph, const Labelling& sigma, int argument);
std::optional<double> weight_of(const WeightedGraph& graph, const Labelling& sigma,
                                const std::string& argument);

/// sigma(a) = phi_a(W(a)) for every constrained argument.
bool is_phi_coherent(const WeightedGraph& graph, const Labelling& sigma, const PhiSpec& spec);
/// sigma(a) < sigma(b) iff W(a) < W(b), over constrained pairs.
bool is_coherent(const WeightedGraph& graph, const Labelling& sigma);
/// sigma(a) < sigma(b) implies W(a) < W(b), over constrained pairs.
bool is_faithful(const WeightedGraph& graph, const Labelling& sigma);

bool satisfies(const WeightedGraph& graph, const Labelling& sigma,
               const SemanticsChoice& semantics);

/// Branch order for the search: predecessors first (topological order of
/// the condensation), declaration order inside strongly connected
/// components and for tie-breaks.
std::vector<int> search_order(const WeightedGraph& graph);

/// Backtracking enumeration of all admitted labellings. For PhiCoherent,
/// once all predecessors of an argument are assigned its degree is forced
/// to phi(W) and conflicts prune; for Coherent/Faithful the pair condition
/// is checked on completed assignments.
LabellingSet enumerate_labellings(const WeightedGraph& graph, int n,
                                  const SemanticsChoice& semantics);

/// Independent oracle: filters all (n+1)^|A| assignments through the class
/// predicate. Throws SizeLimitExceeded when the candidate count exceeds cap.
LabellingSet brute_force_labellings(const WeightedGraph& graph, int n,
                                    const SemanticsChoice& semantics,
                                    long long cap = 10'000'000);

/// (n+1)^count if it fits below limit, nullopt otherwise.
std::optional<long long> candidate_count(int n, std::size_t arg_count, long long limit);

}  // namespace mvarg
