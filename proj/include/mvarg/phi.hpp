#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mvarg/degree.hpp"

namespace mvarg {

/// phi(x) = member of C_n nearest to 1/(1+e^-x); exact midpoints round
/// toward 1 (tie detection tolerance 1e-12 on the distance comparison).
struct SigmoidNearest {
  friend bool operator==(const SigmoidNearest&, const SigmoidNearest&) = default;
};

/// phi(x) = 1 if x > threshold else 0 (strict inequality).
struct StepThreshold {
  double threshold = 0.0;
  friend bool operator==(const StepThreshold&, const StepThreshold&) = default;
};

/// Piecewise-constant map with strictly increasing breakpoints:
/// 0 on (-inf, x_0], then steps[i].value on (x_i, x_{i+1}].
/// `table t:1` is exactly `step t`.
struct ExplicitTable {
  struct Step {
    double x;
    int value;  // C_n numerator
    friend bool operator==(const Step&, const Step&) = default;
  };
  std::vector<Step> steps;
  friend bool operator==(const ExplicitTable&, const ExplicitTable&) = default;
};

using PhiFunction = std::variant<SigmoidNearest, StepThreshold, ExplicitTable>;

/// Evaluate phi at x, returning the C_n numerator. Total on finite reals.
int apply_phi_numerator(const PhiFunction& phi, double x, int n);

/// Sigmoid and step are non-decreasing by construction; a table is
/// non-decreasing iff its value sequence (with the implicit leading 0) is.
bool phi_is_monotone(const PhiFunction& phi);

/// Range and shape checks: table breakpoints strictly increasing, all
/// values in 0..n, threshold finite.
void validate_phi(const PhiFunction& phi, int n);

/// Per-argument phi assignment: a default function plus overrides.
class PhiSpec {
 public:
  explicit PhiSpec(PhiFunction default_fn = SigmoidNearest{});

  void set_override(const std::string& argument, PhiFunction fn);
  const PhiFunction& for_argument(const std::string& argument) const;
  const PhiFunction& default_function() const { return default_; }
  const std::map<std::string, PhiFunction>& overrides() const { return overrides_; }

  bool monotone() const;  // every function non-decreasing
  void validate(int n) const;

 private:
  PhiFunction default_;
  std::map<std::string, PhiFunction> overrides_;
};

TruthDegree apply_phi(const PhiSpec& spec, const std::string& argument, double x, int n);

}  // namespace mvarg
