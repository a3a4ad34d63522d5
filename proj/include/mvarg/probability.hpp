#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mvarg/preferential.hpp"

namespace mvarg {

/// Discrete probability distribution over Sigma's canonical indices,
/// normalized to sum 1.
class Distribution {
 public:
  static Distribution uniform(std::size_t size);                // EmptySigma on 0
  static Distribution from_weights(std::vector<double> raw);    // normalizes

  std::size_t size() const { return p_.size(); }
  double p(std::size_t i) const { return p_.at(i); }
  bool is_uniform() const { return uniform_; }

 private:
  Distribution() = default;
  std::vector<double> p_;
  bool uniform_ = false;
};

/// File format: one `<index> <nonnegative decimal>` per line, `#` comments;
/// missing indices default to 0.
Distribution parse_distribution(const std::string& text, std::size_t sigma_size);

/// P(alpha) = sum over Sigma of sigma(alpha) * p(sigma). alpha may contain
/// T and label(i) atoms.
double probability(const PreferentialInterpretation& interp, const Distribution& dist,
                   const Formula& alpha);

/// P(alpha | beta) = P(alpha and beta) / P(beta); the conjunction uses the
/// interpretation's t-norm. ConditioningOnNullEvent when P(beta) = 0.
double conditional_probability(const PreferentialInterpretation& interp,
                               const Distribution& dist, const Formula& alpha,
                               const Formula& beta);

/// M(alpha) = sum over Sigma of sigma(alpha); 0 on empty Sigma.
double fuzzy_size(const PreferentialInterpretation& interp, const Formula& alpha);

}  // namespace mvarg
