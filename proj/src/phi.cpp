#include "mvarg/phi.hpp"

#include <cmath>
#include <utility>

#include "mvarg/errors.hpp"

namespace mvarg {

namespace {

// Nearest member of C_n to s in [0,1]; near-ties (within 1e-12 on the
// distance comparison) round toward 1.
int nearest_in_cn(double s, int n) {
  int k = static_cast<int>(std::floor(s * n));
  if (k < 0) return 0;
  if (k >= n) return n;
  double d_low = s - static_cast<double>(k) / n;
  double d_high = static_cast<double>(k + 1) / n - s;
  if (std::abs(d_low - d_high) <= 1e-12) return k + 1;
  return d_low < d_high ? k : k + 1;
}

}  // namespace

int apply_phi_numerator(const PhiFunction& phi, double x, int n) {
  if (const auto* sig = std::get_if<SigmoidNearest>(&phi)) {
    (void)sig;
    double s = 1.0 / (1.0 + std::exp(-x));
    return nearest_in_cn(s, n);
  }
  if (const auto* step = std::get_if<StepThreshold>(&phi)) {
    return x > step->threshold ? n : 0;
  }
  const auto& table = std::get<ExplicitTable>(phi);
  int value = 0;  // base value on (-inf, x_0]
  for (const auto& s : table.steps) {
    if (x > s.x)
      value = s.value;
    else
      break;
  }
  return value;
}

bool phi_is_monotone(const PhiFunction& phi) {
  if (const auto* table = std::get_if<ExplicitTable>(&phi)) {
    int prev = 0;
    for (const auto& s : table->steps) {
      if (s.value < prev) return false;
      prev = s.value;
    }
  }
  return true;  // sigmoid and step are non-decreasing
}

void validate_phi(const PhiFunction& phi, int n) {
  if (n < 1) throw Error(Errc::BoundOutOfRange, "resolution must be >= 1");
  if (const auto* step = std::get_if<StepThreshold>(&phi)) {
    if (!std::isfinite(step->threshold))
      throw Error(Errc::ZeroOrNonfiniteWeight, "step threshold must be finite");
  } else if (const auto* table = std::get_if<ExplicitTable>(&phi)) {
    double prev_x = -1.0;
    bool first = true;
    for (const auto& s : table->steps) {
      if (!std::isfinite(s.x))
        throw Error(Errc::ZeroOrNonfiniteWeight, "table breakpoint must be finite");
      if (!first && s.x <= prev_x)
        throw Error(Errc::BoundOutOfRange, "table breakpoints must be strictly increasing");
      if (s.value < 0 || s.value > n)
        throw Error(Errc::BoundOutOfRange,
                    "table value " + std::to_string(s.value) + " outside C_" + std::to_string(n));
      prev_x = s.x;
      first = false;
    }
  }
}

PhiSpec::PhiSpec(PhiFunction default_fn) : default_(std::move(default_fn)) {}

void PhiSpec::set_override(const std::string& argument, PhiFunction fn) {
  overrides_[argument] = std::move(fn);
}

const PhiFunction& PhiSpec::for_argument(const std::string& argument) const {
  auto it = overrides_.find(argument);
  return it != overrides_.end() ? it->second : default_;
}

bool PhiSpec::monotone() const {
  if (!phi_is_monotone(default_)) return false;
  for (const auto& [_, fn] : overrides_)
    if (!phi_is_monotone(fn)) return false;
  return true;
}

void PhiSpec::validate(int n) const {
  validate_phi(default_, n);
  for (const auto& [_, fn] : overrides_) validate_phi(fn, n);
}

TruthDegree apply_phi(const PhiSpec& spec, const std::string& argument, double x, int n) {
  return TruthDegree(apply_phi_numerator(spec.for_argument(argument), x, n), n);
}

}  // namespace mvarg
