#include "mvarg/probability.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

#include "mvarg/errors.hpp"

namespace mvarg {

Distribution Distribution::uniform(std::size_t size) {
  if (size == 0)
    throw Error(Errc::EmptySigma, "no labellings to distribute probability over");
  Distribution d;
  d.p_.assign(size, 1.0 / static_cast<double>(size));
  d.uniform_ = true;
  return d;
}

Distribution Distribution::from_weights(std::vector<double> raw) {
  if (raw.empty())
    throw Error(Errc::EmptySigma, "no labellings to distribute probability over");
  double total = 0.0;
  for (double w : raw) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw Error(Errc::ZeroDistribution, "weights must be finite and nonnegative");
    total += w;
  }
  if (total <= 0.0)
    throw Error(Errc::ZeroDistribution, "weights sum to zero");
  Distribution d;
  d.p_.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) d.p_[i] = raw[i] / total;
  return d;
}

Distribution parse_distribution(const std::string& text, std::size_t sigma_size) {
  std::vector<double> raw(sigma_size, 0.0);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long index;
    if (!(ls >> index))
      throw ParseError(Errc::SyntaxError, line_no, 1, "expected `<index> <weight>`");
    double weight;
    if (!(ls >> weight))
      throw ParseError(Errc::SyntaxError, line_no, 1, "expected `<index> <weight>`");
    std::string extra;
    if (ls >> extra)
      throw ParseError(Errc::SyntaxError, line_no, 1, "trailing text after weight");
    if (index < 0 || index >= static_cast<long long>(sigma_size))
      throw Error(Errc::LabelIndexOutOfRange,
                  "labelling index " + std::to_string(index) + " out of range (0.." +
                      std::to_string(sigma_size == 0 ? 0 : sigma_size - 1) + ")");
    raw[static_cast<std::size_t>(index)] = weight;
  }
  return Distribution::from_weights(std::move(raw));
}

double probability(const PreferentialInterpretation& interp, const Distribution& dist,
                   const Formula& alpha) {
  const auto& sigma = interp.sigma();
  if (dist.size() != sigma.size())
    throw Error(Errc::ZeroDistribution, "distribution size does not match labelling count");
  const int n = interp.resolution();
  auto binding = interp.bind(alpha);
  double total = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    total += dist.p(i) * (static_cast<double>(interp.eval_bound(binding, i, alpha)) / n);
  return total;
}

double conditional_probability(const PreferentialInterpretation& interp,
                               const Distribution& dist, const Formula& alpha,
                               const Formula& beta) {
  const auto& sigma = interp.sigma();
  if (dist.size() != sigma.size())
    throw Error(Errc::ZeroDistribution, "distribution size does not match labelling count");
  const int n = interp.resolution();
  auto combined = Formula::conj(
      std::shared_ptr<const Formula>(&alpha, [](const Formula*) {}),
      std::shared_ptr<const Formula>(&beta, [](const Formula*) {}));
  auto binding = interp.bind(*combined);
  double joint = 0.0;
  double marginal = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    int a = interp.eval_bound(binding, i, alpha);
    int b = interp.eval_bound(binding, i, beta);
    joint += dist.p(i) * (static_cast<double>(interp.logic().tnorm(a, b, n)) / n);
    marginal += dist.p(i) * (static_cast<double>(b) / n);
  }
  if (marginal <= 0.0)
    throw Error(Errc::ConditioningOnNullEvent, "conditioning event has probability 0");
  return joint / marginal;
}

double fuzzy_size(const PreferentialInterpretation& interp, const Formula& alpha) {
  const auto& sigma = interp.sigma();
  const int n = interp.resolution();
  auto binding = interp.bind(alpha);
  double total = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    total += static_cast<double>(interp.eval_bound(binding, i, alpha)) / n;
  return total;
}

}  // namespace mvarg
