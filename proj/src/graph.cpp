#include "mvarg/graph.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "mvarg/errors.hpp"

namespace mvarg {

WeightedGraph::WeightedGraph(std::vector<std::string> arguments,
                             const std::vector<EdgeSpec>& edges)
    : arguments_(std::move(arguments)) {
  index_.reserve(arguments_.size());
  for (std::size_t i = 0; i < arguments_.size(); ++i) {
    auto [it, inserted] = index_.emplace(arguments_[i], static_cast<int>(i));
    if (!inserted) throw Error(Errc::DuplicateArgument, "argument '" + arguments_[i] + "'");
  }

  incoming_.resize(arguments_.size());
  outgoing_.resize(arguments_.size());
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    auto src = index_.find(e.source);
    if (src == index_.end()) throw Error(Errc::UnknownEndpoint, "edge source '" + e.source + "'");
    auto dst = index_.find(e.target);
    if (dst == index_.end()) throw Error(Errc::UnknownEndpoint, "edge target '" + e.target + "'");
    if (e.weight == 0.0 || !std::isfinite(e.weight))
      throw Error(Errc::ZeroOrNonfiniteWeight,
                  "edge (" + e.source + "," + e.target + ") weight must be finite and nonzero");
    if (!seen.emplace(src->second, dst->second).second)
      throw Error(Errc::DuplicateEdge, "edge (" + e.source + "," + e.target + ")");
    edges_.push_back({src->second, dst->second, e.weight});
    incoming_[dst->second].push_back({src->second, e.weight});
    outgoing_[src->second].push_back(dst->second);
  }
}

int WeightedGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(Errc::UnknownArgument, "'" + name + "'");
  return it->second;
}

std::optional<int> WeightedGraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> WeightedGraph::predecessors(const std::string& name) const {
  int target = index_of(name);
  std::set<int> sources;
  for (const InEdge& e : incoming_[target]) sources.insert(e.source);
  std::vector<std::string> out;
  out.reserve(sources.size());
  for (int s : sources) out.push_back(arguments_[s]);
  return out;
}

Labelling::Labelling(std::vector<int> numerators, int resolution)
    : numerators_(std::move(numerators)), resolution_(resolution) {
  if (resolution_ < 1)
    throw Error(Errc::BoundOutOfRange, "resolution must be >= 1");
  for (int k : numerators_)
    if (k < 0 || k > resolution_)
      throw Error(Errc::BoundOutOfRange, "labelling value " + std::to_string(k) + " outside 0.." +
                                             std::to_string(resolution_));
}

std::string Labelling::str(const WeightedGraph& graph) const {
  std::string out;
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (i > 0) out += ' ';
    out += graph.name(static_cast<int>(i));
    out += '=';
    out += degree_str(numerators_[i], resolution_);
  }
  return out;
}

}  // namespace mvarg
