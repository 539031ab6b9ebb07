#pragma once

#include <cstdint>
#include <vector>

#include "supfit/angle.hpp"

namespace supfit {

/// The uniform design grid theta_i = 2*pi*i/n - pi (i = 1..n) together with
/// the dyadic bandwidth grid I = {0} u {2^j : 2^j <= floor(n/16)}.
///
/// n must be >= 16 and divisible by 4 so that theta = 0 and theta = pi/2 are
/// grid angles. Indices are 1-based like the design; any integer index is
/// accepted and resolved cyclically.
class GridSpec {
 public:
  explicit GridSpec(int n);

  int size() const { return n_; }

  /// theta_i = 2*pi*i/n - pi, normalized to (-pi, pi].
  double theta(std::int64_t i) const {
    return Angle::normalize(kTwoPi * static_cast<double>(i) / n_ - kPi);
  }
  Angle angle(std::int64_t i) const { return Angle(theta(i)); }

  /// Storage slot in [0, n) for a 1-based cyclic index.
  int resolve(std::int64_t i) const {
    std::int64_t s = (i - 1) % n_;
    if (s < 0) s += n_;
    return static_cast<int>(s);
  }

  /// 1-based grid index whose angle equals `a` within `tol`.
  /// Throws std::invalid_argument if `a` is not a grid angle.
  std::int64_t index_of(Angle a, double tol = 1e-9) const;

  const std::vector<int>& bandwidths() const { return bandwidths_; }
  int max_bandwidth() const { return bandwidths_.back(); }

  double spacing() const { return kTwoPi / n_; }
  double cos_spacing() const { return cos_spacing_; }

 private:
  int n_;
  double cos_spacing_;
  std::vector<int> bandwidths_;
};

}  // namespace supfit
