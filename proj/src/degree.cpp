#include "mvarg/degree.hpp"

#include "mvarg/errors.hpp"

namespace mvarg {

TruthDegree::TruthDegree(int numerator, int resolution) : num_(numerator), res_(resolution) {
  if (resolution < 1)
    throw Error(Errc::BoundOutOfRange, "resolution must be >= 1, got " + std::to_string(resolution));
  if (numerator < 0 || numerator > resolution)
    throw Error(Errc::BoundOutOfRange,
                "numerator " + std::to_string(numerator) + " outside 0.." + std::to_string(resolution));
}

void TruthDegree::check_same_resolution(const TruthDegree& a, const TruthDegree& b) {
  if (a.res_ != b.res_)
    throw Error(Errc::MixedResolution, "cannot compare degrees at resolutions " +
                                           std::to_string(a.res_) + " and " + std::to_string(b.res_));
}

std::string TruthDegree::str() const { return degree_str(num_, res_); }

std::string degree_str(int numerator, int resolution) {
  return std::to_string(numerator) + "/" + std::to_string(resolution);
}

}  // namespace mvarg
