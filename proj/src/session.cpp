#include "mvarg/session.hpp"

#include <sstream>
#include <utility>

#include "json.hpp"
#include "mvarg/errors.hpp"

namespace mvarg {

namespace {

std::vector<std::pair<std::string, std::string>> label_pairs(const WeightedGraph& graph,
                                                             const Labelling& sigma) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    out.emplace_back(graph.name(static_cast<int>(i)),
                     degree_str(sigma.numerator(i), sigma.resolution()));
  return out;
}

std::string join_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string out;
  for (const auto& [name, deg] : pairs) {
    if (!out.empty()) out += ' ';
    out += name + "=" + deg;
  }
  return out;
}

LeafRecord make_leaf_record(const WeightedGraph& graph, const GradedImplication& g,
                            const Verdict& v) {
  LeafRecord lr;
  lr.implication = g.str();
  lr.satisfied = v.satisfied;
  lr.degree = v.degree.str();
  lr.preferred_count = v.preferred_count;
  if (v.counterexample) lr.counterexample = label_pairs(graph, *v.counterexample);
  return lr;
}

void check_label_indices(const Formula& f, std::size_t sigma_size) {
  std::vector<int> indices;
  f.collect_label_indices(indices);
  for (int i : indices)
    if (i >= static_cast<int>(sigma_size))
      throw Error(Errc::LabelIndexOutOfRange,
                  "label(" + std::to_string(i) + ") exceeds the labelling count " +
                      std::to_string(sigma_size));
}

void check_query_label_indices(const Query& q, std::size_t sigma_size) {
  if (q.kind() == Query::Kind::Leaf) {
    check_label_indices(*q.graded().antecedent, sigma_size);
    check_label_indices(*q.graded().consequent, sigma_size);
    return;
  }
  if (q.lhs()) check_query_label_indices(*q.lhs(), sigma_size);
  if (q.rhs()) check_query_label_indices(*q.rhs(), sigma_size);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Report run_session(const Session& session) {
  const int n = session.resolution;
  if (n < 1) throw Error(Errc::BoundOutOfRange, "resolution must be >= 1");
  // Defensive closure check; skipped for very large n where the exhaustive
  // sweep would dominate the run.
  if (n <= 2000 && !closure_check(*session.logic, n))
    throw Error(Errc::BoundOutOfRange,
                std::string(session.logic->name) + " is not closed on C_" + std::to_string(n));
  if (!candidate_count(n, session.graph.arg_count(), session.cap))
    throw Error(Errc::SizeLimitExceeded,
                "(n+1)^|A| exceeds the cap of " + std::to_string(session.cap) +
                    " candidate labellings");

  LabellingSet sigma = enumerate_labellings(session.graph, n, session.semantics);
  PreferentialInterpretation interp(session.graph, std::move(sigma), *session.logic);
  const std::size_t sigma_size = interp.sigma().size();

  Report report;
  report.resolution = n;
  report.semantics = session.semantics.name();
  report.logic = session.logic->name;
  report.distribution = session.distribution_text ? "custom" : "uniform";
  report.sigma_count = sigma_size;
  if (sigma_size == 0)
    report.warnings.push_back("no admitted labellings; implications hold vacuously");

  std::optional<Distribution> dist;
  auto get_dist = [&]() -> const Distribution& {
    if (!dist) {
      if (session.distribution_text)
        dist = parse_distribution(*session.distribution_text, sigma_size);
      else
        dist = Distribution::uniform(sigma_size);
    }
    return *dist;
  };

  for (const Statement& statement : session.statements) {
    StatementRecord rec;
    rec.input_text = statement_text(statement);
    if (const auto* st = std::get_if<CheckStatement>(&statement)) {
      rec.kind = "check";
      check_query_label_indices(*st->query, sigma_size);
      QueryResult qr = interp.eval_query(*st->query);
      rec.satisfied = qr.satisfied;
      bool vacuous = false;
      for (const auto& [g, v] : qr.leaves) {
        vacuous = vacuous || v.empty_sigma;
        rec.leaves.push_back(make_leaf_record(session.graph, *g, v));
      }
      if (vacuous)
        rec.warnings.push_back("no admitted labellings; implications hold vacuously");
    } else if (const auto* st = std::get_if<DegreeStatement>(&statement)) {
      rec.kind = "degree";
      check_label_indices(*st->lhs, sigma_size);
      check_label_indices(*st->rhs, sigma_size);
      GradedImplication g{st->lhs, st->rhs, GradedImplication::Bound::AtLeast,
                          TruthDegree(n, n)};
      Verdict v = interp.check_graded(g);
      rec.degree = v.degree.str();
      rec.preferred_count = v.preferred_count;
      if (v.counterexample)
        rec.counterexample = label_pairs(session.graph, *v.counterexample);
      if (v.empty_sigma)
        rec.warnings.push_back("no admitted labellings; implications hold vacuously");
    } else if (const auto* st = std::get_if<ProbStatement>(&statement)) {
      rec.kind = "prob";
      check_label_indices(*st->event, sigma_size);
      if (st->given) check_label_indices(*st->given, sigma_size);
      rec.probability = st->given
                            ? conditional_probability(interp, get_dist(), *st->event, *st->given)
                            : probability(interp, get_dist(), *st->event);
    } else {
      rec.kind = "list_labellings";
      bool any_constrained = false;
      for (std::size_t a = 0; a < session.graph.arg_count(); ++a)
        any_constrained = any_constrained || session.graph.constrained(static_cast<int>(a));
      for (std::size_t i = 0; i < sigma_size; ++i) {
        const Labelling& sigma_i = interp.sigma()[i];
        rec.labellings.push_back(sigma_i.str(session.graph));
        if (!any_constrained) continue;
        // Echo the weighted sums so borderline phi/order decisions can be
        // audited against the exact doubles used.
        std::string w_row;
        for (std::size_t a = 0; a < session.graph.arg_count(); ++a) {
          if (!session.graph.constrained(static_cast<int>(a))) continue;
          if (!w_row.empty()) w_row += ' ';
          w_row += session.graph.name(static_cast<int>(a)) + "=" +
                   format_double(*weight_of(session.graph, sigma_i, static_cast<int>(a)));
        }
        rec.weights.push_back(std::move(w_row));
      }
    }
    report.statements.push_back(std::move(rec));
  }
  return report;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "resolution: " << resolution << "\n";
  out << "semantics: " << semantics << "\n";
  out << "logic: " << logic << "\n";
  out << "distribution: " << distribution << "\n";
  out << "labellings: " << sigma_count << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  for (const auto& st : statements) {
    out << "\n== " << st.input_text << "\n";
    if (st.satisfied) out << "satisfied: " << yes_no(*st.satisfied) << "\n";
    if (st.degree) out << "degree: " << *st.degree << "\n";
    if (st.preferred_count) out << "preferred_count: " << *st.preferred_count << "\n";
    if (st.counterexample) out << "counterexample: " << join_pairs(*st.counterexample) << "\n";
    if (st.probability) out << "probability: " << format_double(*st.probability) << "\n";
    if (st.kind == "list_labellings")
      for (std::size_t i = 0; i < st.labellings.size(); ++i) {
        out << i << ": " << st.labellings[i];
        if (i < st.weights.size()) out << "  (W: " << st.weights[i] << ")";
        out << "\n";
      }
    for (std::size_t i = 0; i < st.leaves.size(); ++i) {
      const LeafRecord& lf = st.leaves[i];
      out << "leaf " << i + 1 << ": " << lf.implication << "\n";
      out << "  satisfied: " << yes_no(lf.satisfied) << "\n";
      out << "  degree: " << lf.degree << "\n";
      if (lf.preferred_count) out << "  preferred_count: " << *lf.preferred_count << "\n";
      if (lf.counterexample)
        out << "  counterexample: " << join_pairs(*lf.counterexample) << "\n";
    }
    for (const auto& w : st.warnings) out << "warning: " << w << "\n";
  }
  return out.str();
}

std::string Report::to_json() const {
  using json = nlohmann::ordered_json;
  auto pairs_obj = [](const std::vector<std::pair<std::string, std::string>>& pairs) {
    json o = json::object();
    for (const auto& [name, deg] : pairs) o[name] = deg;
    return o;
  };

  json j;
  j["resolution"] = resolution;
  j["semantics"] = semantics;
  j["logic"] = logic;
  j["distribution"] = distribution;
  j["labelling_count"] = sigma_count;
  j["warnings"] = warnings;
  j["statements"] = json::array();
  for (const auto& st : statements) {
    json s;
    s["kind"] = st.kind;
    s["input_text"] = st.input_text;
    if (st.satisfied) s["satisfied"] = *st.satisfied;
    if (st.degree) s["degree"] = *st.degree;
    if (st.preferred_count) s["preferred_count"] = *st.preferred_count;
    if (st.counterexample) s["counterexample"] = pairs_obj(*st.counterexample);
    if (st.probability) s["probability"] = *st.probability;
    if (st.kind == "list_labellings") {
      s["labellings"] = st.labellings;
      if (!st.weights.empty()) s["weights"] = st.weights;
    }
    if (st.kind == "check") {
      s["leaves"] = json::array();
      for (const auto& lf : st.leaves) {
        json l;
        l["implication"] = lf.implication;
        l["satisfied"] = lf.satisfied;
        l["degree"] = lf.degree;
        if (lf.preferred_count) l["preferred_count"] = *lf.preferred_count;
        if (lf.counterexample) l["counterexample"] = pairs_obj(*lf.counterexample);
        s["leaves"].push_back(std::move(l));
      }
    }
    s["warnings"] = st.warnings;
    j["statements"].push_back(std::move(s));
  }
  return j.dump(2) + "\n";
}

}  // namespace mvarg
