#pragma once

#include <compare>
#include <string>

namespace mvarg {

/// An exact truth degree k/n in the finite scale C_n = {0, 1/n, ..., 1}.
/// All comparisons are exact integer comparisons of numerators; degrees at
/// different resolutions never compare (MixedResolution).
class TruthDegree {
 public:
  TruthDegree() : num_(0), res_(1) {}
  TruthDegree(int numerator, int resolution);

  int numerator() const { return num_; }
  int resolution() const { return res_; }
  double value() const { return static_cast<double>(num_) / res_; }
  std::string str() const;  // "k/n"

  friend bool operator==(const TruthDegree& a, const TruthDegree& b) {
    check_same_resolution(a, b);
    return a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const TruthDegree& a, const TruthDegree& b) {
    check_same_resolution(a, b);
    return a.num_ <=> b.num_;
  }

 private:
  static void check_same_resolution(const TruthDegree& a, const TruthDegree& b);

  int num_;
  int res_;
};

/// "k/n" for a raw numerator, without constructing a TruthDegree.
std::string degree_str(int numerator, int resolution);

}  // namespace mvarg
