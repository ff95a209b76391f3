#pragma once

#include <cmath>
#include <limits>

namespace vabs {

// Absolute tolerance on total probability mass (pmfs and channel rows).
inline constexpr double kMassTolerance = 1e-9;
// Default tolerance for comparing information quantities.
inline constexpr double kCompareTolerance = 1e-12;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Neumaier's variant of Kahan summation. Entropy over ~10^6 letters needs it
// to stay inside 1e-12 of the closed form.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace vabs
