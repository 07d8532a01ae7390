#pragma once

#include <cmath>

namespace detmom {

/// Neumaier-compensated long double sum. With the x87 64-bit significand the
/// (sum, correction) pair carries well over 30 significant digits, and the
/// 15-bit exponent keeps contributions near 1e-4000 representable.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      correction_ += (sum_ - t) + x;
    } else {
      correction_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator+=(const CompensatedSum& o) {
    *this += o.sum_;
    correction_ += o.correction_;
    return *this;
  }

  long double value() const { return sum_ + correction_; }
  long double head() const { return sum_; }

 private:
  long double sum_ = 0;
  long double correction_ = 0;
};

}  // namespace detmom
