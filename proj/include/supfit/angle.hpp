#pragma once

#include <cmath>
#include <numbers>

namespace supfit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An angle in radians, normalized to (-pi, pi].
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians) : value_(normalize(radians)) {}

  double radians() const { return value_; }

  /// Maps any real to (-pi, pi] by subtracting multiples of 2*pi.
  static double normalize(double r) {
    double x = std::remainder(r, kTwoPi);  // in [-pi, pi]
    if (x <= -kPi) x += kTwoPi;
    return x;
  }

  friend bool operator==(Angle a, Angle b) { return a.value_ == b.value_; }

 private:
  double value_ = 0.0;
};

}  // namespace supfit
