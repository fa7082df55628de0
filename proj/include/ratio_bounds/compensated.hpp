#pragma once

#include <cmath>

namespace ratio_bounds {

/// Neumaier-compensated accumulator. Keeps the rounding error of long sums
/// (up to ~10^6 terms here) below ~1 ulp of the result, which the series
/// tail bounds in this library rely on.
template <typename T>
struct CompensatedSum {
  T sum{0};
  T compensation{0};

  void add(T value) {
    const T t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  CompensatedSum& operator+=(T value) {
    add(value);
    return *this;
  }

  T value() const { return sum + compensation; }
};

}  // namespace ratio_bounds
