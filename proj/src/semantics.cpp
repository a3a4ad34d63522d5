#include "mvarg/semantics.hpp"

#include <algorithm>

#include "mvarg/errors.hpp"

namespace mvarg {

const char* SemanticsChoice::name() const {
  switch (kind) {
    case Kind::Coherent:
      return "coherent";
    case Kind::Faithful:
      return "faithful";
    default:
      return "phi-coherent";
  }
}

std::optional<std::size_t> LabellingSet::index_of(const Labelling& sigma) const {
  auto it = std::lower_bound(labellings.begin(), labellings.end(), sigma);
  if (it == labellings.end() || !(*it == sigma)) return std::nullopt;
  return static_cast<std::size_t>(it - labellings.begin());
}

std::optional<double> weight_of(const WeightedGraph& graph, const Labelling& sigma,
                                int argument) {
  const auto& in = graph.incoming(argument);
  if (in.empty()) return std::nullopt;
  double w = 0.0;
  for (const auto& e : in)
    w += e.weight * (static_cast<double>(sigma.numerator(e.source)) / sigma.resolution());
  return w;
}

std::optional<double> weight_of(const WeightedGraph& graph, const Labelling& sigma,
                                const std::string& argument) {
  return weight_of(graph, sigma, graph.index_of(argument));
}

bool is_phi_coherent(const WeightedGraph& graph, const Labelling& sigma, const PhiSpec& spec) {
  const int n = sigma.resolution();
  for (int a = 0; a < static_cast<int>(graph.arg_count()); ++a) {
    if (!graph.constrained(a)) continue;
    double w = *weight_of(graph, sigma, a);
    if (sigma.numerator(a) != apply_phi_numerator(spec.for_argument(graph.name(a)), w, n))
      return false;
  }
  return true;
}

namespace {

// Constrained indices with their weights under sigma, for pair conditions.
std::vector<std::pair<int, double>> constrained_weights(const WeightedGraph& graph,
                                                        const Labelling& sigma) {
  std::vector<std::pair<int, double>> out;
  for (int a = 0; a < static_cast<int>(graph.arg_count()); ++a)
    if (graph.constrained(a)) out.emplace_back(a, *weight_of(graph, sigma, a));
  return out;
}

}  // namespace

bool is_coherent(const WeightedGraph& graph, const Labelling& sigma) {
  auto cw = constrained_weights(graph, sigma);
  for (const auto& [a, wa] : cw)
    for (const auto& [b, wb] : cw) {
      bool deg_lt = sigma.numerator(a) < sigma.numerator(b);
      if (deg_lt != (wa < wb)) return false;
    }
  return true;
}

bool is_faithful(const WeightedGraph& graph, const Labelling& sigma) {
  auto cw = constrained_weights(graph, sigma);
  for (const auto& [a, wa] : cw)
    for (const auto& [b, wb] : cw)
      if (sigma.numerator(a) < sigma.numerator(b) && !(wa < wb)) return false;
  return true;
}

bool satisfies(const WeightedGraph& graph, const Labelling& sigma,
               const SemanticsChoice& semantics) {
  switch (semantics.kind) {
    case SemanticsChoice::Kind::Coherent:
      return is_coherent(graph, sigma);
    case SemanticsChoice::Kind::Faithful:
      return is_faithful(graph, sigma);
    default:
      return is_phi_coherent(graph, sigma, semantics.phi);
  }
}

namespace {

// Iterative Tarjan. Components are emitted sinks-first, so reversing the
// component list puts predecessors before successors.
struct Tarjan {
  const WeightedGraph& graph;
  std::vector<int> index, low;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  explicit Tarjan(const WeightedGraph& g)
      : graph(g), index(g.arg_count(), -1), low(g.arg_count(), 0), on_stack(g.arg_count(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      std::size_t next_edge;
    };
    std::vector<Frame> frames{{root, 0}};
    visit(root);
    while (!frames.empty()) {
      auto& fr = frames.back();
      const auto& succ = graph.outgoing(fr.v);
      if (fr.next_edge < succ.size()) {
        int w = succ[fr.next_edge++];
        if (index[w] == -1) {
          visit(w);
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
      } else {
        if (low[fr.v] == index[fr.v]) pop_component(fr.v);
        int v = fr.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }

  void visit(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
  }

  void pop_component(int root) {
    std::vector<int> comp;
    int w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      comp.push_back(w);
    } while (w != root);
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
};

}  // namespace

std::vector<int> search_order(const WeightedGraph& graph) {
  Tarjan t(graph);
  for (int v = 0; v < static_cast<int>(graph.arg_count()); ++v)
    if (t.index[v] == -1) t.run(v);
  std::vector<int> order;
  order.reserve(graph.arg_count());
  for (auto it = t.components.rbegin(); it != t.components.rend(); ++it)
    order.insert(order.end(), it->begin(), it->end());
  return order;
}

namespace {

// Backtracking state for phi-coherent propagation. An argument's degree is
// forced the moment its last in-edge source gets a value; mismatches prune.
struct PhiSearch {
  const WeightedGraph& graph;
  const PhiSpec& spec;
  int n;
  std::vector<int> value;          // -1 while unassigned
  std::vector<int> assigned_preds; // in-edges whose source has a value
  std::vector<int> trail;
  std::vector<Labelling>& out;

  PhiSearch(const WeightedGraph& g, const PhiSpec& s, int n_, std::vector<Labelling>& out_)
      : graph(g),
        spec(s),
        n(n_),
        value(g.arg_count(), -1),
        assigned_preds(g.arg_count(), 0),
        out(out_) {}

  double weight(int a) const {
    double w = 0.0;
    for (const auto& e : graph.incoming(a))
      w += e.weight * (static_cast<double>(value[e.source]) / n);
    return w;
  }

  bool assign_chain(int arg, int val) {
    std::vector<std::pair<int, int>> queue{{arg, val}};
    std::size_t head = 0;
    while (head < queue.size()) {
      auto [a, v] = queue[head++];
      if (value[a] != -1) {
        if (value[a] != v) return false;
        continue;
      }
      value[a] = v;
      trail.push_back(a);
      // undo_to decrements assigned_preds for every out-neighbour of a, so a
      // conflict must not abort this loop before all increments are in place.
      bool conflict = false;
      for (int s : graph.outgoing(a)) {
        ++assigned_preds[s];
        if (assigned_preds[s] == static_cast<int>(graph.incoming(s).size())) {
          int forced = apply_phi_numerator(spec.for_argument(graph.name(s)), weight(s), n);
          if (value[s] != -1) {
            if (value[s] != forced) conflict = true;
          } else {
            queue.emplace_back(s, forced);
          }
        }
      }
      if (conflict) return false;
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      int a = trail.back();
      trail.pop_back();
      value[a] = -1;
      for (int s : graph.outgoing(a)) --assigned_preds[s];
    }
  }

  void search(const std::vector<int>& order, std::size_t pos) {
    while (pos < order.size() && value[order[pos]] != -1) ++pos;
    if (pos == order.size()) {
      out.emplace_back(value, n);
      return;
    }
    int arg = order[pos];
    for (int v = 0; v <= n; ++v) {
      std::size_t mark = trail.size();
      if (assign_chain(arg, v)) search(order, pos + 1);
      undo_to(mark);
    }
  }
};

// Plain branch over every argument; the pair condition only becomes
// checkable on complete assignments.
void leaf_search(const WeightedGraph& graph, int n, const SemanticsChoice& semantics,
                 const std::vector<int>& order, std::size_t pos, std::vector<int>& value,
                 std::vector<Labelling>& out) {
  if (pos == order.size()) {
    Labelling sigma(value, n);
    if (satisfies(graph, sigma, semantics)) out.push_back(std::move(sigma));
    return;
  }
  for (int v = 0; v <= n; ++v) {
    value[order[pos]] = v;
    leaf_search(graph, n, semantics, order, pos + 1, value, out);
  }
}

}  // namespace

LabellingSet enumerate_labellings(const WeightedGraph& graph, int n,
                                  const SemanticsChoice& semantics) {
  if (n < 1) throw Error(Errc::BoundOutOfRange, "resolution must be >= 1");
  if (semantics.kind == SemanticsChoice::Kind::PhiCoherent) semantics.phi.validate(n);

  std::vector<Labelling> found;
  auto order = search_order(graph);
  if (semantics.kind == SemanticsChoice::Kind::PhiCoherent) {
    PhiSearch search(graph, semantics.phi, n, found);
    search.search(order, 0);
  } else {
    std::vector<int> value(graph.arg_count(), 0);
    leaf_search(graph, n, semantics, order, 0, value, found);
  }
  std::sort(found.begin(), found.end());
  return LabellingSet{std::move(found), semantics, n};
}

LabellingSet brute_force_labellings(const WeightedGraph& graph, int n,
                                    const SemanticsChoice& semantics, long long cap) {
  if (n < 1) throw Error(Errc::BoundOutOfRange, "resolution must be >= 1");
  if (semantics.kind == SemanticsChoice::Kind::PhiCoherent) semantics.phi.validate(n);
  if (!candidate_count(n, graph.arg_count(), cap))
    throw Error(Errc::SizeLimitExceeded,
                "candidate space exceeds " + std::to_string(cap) + " assignments");

  std::vector<Labelling> found;
  std::vector<int> value(graph.arg_count(), 0);
  // Odometer with the last argument as the fastest digit emits candidates
  // in canonical lexicographic order already.
  for (;;) {
    Labelling sigma(value, n);
    if (satisfies(graph, sigma, semantics)) found.push_back(std::move(sigma));
    int i = static_cast<int>(value.size()) - 1;
    while (i >= 0 && value[i] == n) value[i--] = 0;
    if (i < 0) break;
    ++value[i];
  }
  return LabellingSet{std::move(found), semantics, n};
}

std::optional<long long> candidate_count(int n, std::size_t arg_count, long long limit) {
  long long total = 1;
  for (std::size_t i = 0; i < arg_count; ++i) {
    if (total > limit / (n + 1)) return std::nullopt;
    total *= n + 1;
  }
  if (total > limit) return std::nullopt;
  return total;
}

}  // namespace mvarg
