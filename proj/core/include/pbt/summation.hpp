#pragma once

#include <cmath>

namespace pbt {

/// Compensated (Neumaier) summation. Sums over diagrams span many orders of
/// magnitude, so every such sum goes through this accumulator.
class KahanSum {
 public:
  KahanSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  KahanSum& operator+=(const KahanSum& other) {
    *this += other.sum_;
    *this += other.comp_;
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace pbt
