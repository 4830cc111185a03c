#pragma once

#include <cmath>

namespace orlicz {

/// Neumaier's variant of Kahan summation; stays accurate when an addend is
/// larger in magnitude than the running sum.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  CompensatedSum& operator+=(double value) noexcept {
    const double t = sum_ + value;
    if (!std::isfinite(t)) {
      sum_ = t;
      compensation_ = 0.0;
      return *this;
    }
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return std::isfinite(sum_) ? sum_ + compensation_ : sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace orlicz
