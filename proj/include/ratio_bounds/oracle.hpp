#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "ratio_bounds/series.hpp"
#include "ratio_bounds/truncated.hpp"

namespace ratio_bounds {

namespace detail {

inline void require_open_half_pi(double x) {
  if (!(x > 0.0) || !(x < std::numbers::pi / 2.0)) {
    throw std::domain_error("x must lie in (0, pi/2)");
  }
}

}  // namespace detail

/// cosh x/cos x by direct evaluation (relative error a few ulp).
inline double ratio_coshcos(double x) {
  detail::require_open_half_pi(x);
  return std::cosh(x) / std::cos(x);
}

/// sinh x/sin x. Below 1e-4 the even Taylor quotient of the ratio is used so
/// the few-ulp contract holds all the way down to 0.
inline double ratio_sinhsin(double x) {
  detail::require_open_half_pi(x);
  if (x < 1e-4) {
    const double x2 = x * x;
    const double num = 1.0 + x2 * (1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (1.0 / 5040.0 +
                       x2 * (1.0 / 362880.0 + x2 / 39916800.0))));
    const double den = 1.0 + x2 * (-1.0 / 6.0 + x2 * (1.0 / 120.0 + x2 * (-1.0 / 5040.0 +
                       x2 * (1.0 / 362880.0 - x2 / 39916800.0))));
    return num / den;
  }
  return std::sinh(x) / std::sin(x);
}

/// Partial product of the expansion
///   cosh x/cos x = prod_{n>=1} (1 + w_n)/(1 - w_n),  w_n = 4x^2/[pi^2 (2n-1)^2].
/// value is the product over n = 1..n_terms; the omitted log factors satisfy
///   sum_{n>N} log_ratio(w_n) <= c * sum_{n>N} w_n,   c = log_ratio(w_{N+1})/w_{N+1}
/// (log_ratio(w)/w increases in w), and sum_{n>N} w_n <= 4x^2/[2 pi^2 (2N-1)]
/// by integral comparison, so value <= cosh x/cos x <= value + tail_bound.
inline TruncatedValue product_coshcos(double x, std::int64_t n_terms) {
  detail::require_open_half_pi(x);
  if (n_terms < 1) {
    throw std::domain_error("n_terms must be >= 1");
  }
  constexpr double pi = std::numbers::pi;
  const double c = 4.0 * x * x / (pi * pi);
  double product = 1.0;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    const double d = static_cast<double>(2 * n - 1);
    const double w = c / (d * d);
    product *= (1.0 + w) / (1.0 - w);
  }
  const double d_next = static_cast<double>(2 * n_terms + 1);
  const double w_next = c / (d_next * d_next);
  const double slope = log_ratio(w_next) / w_next;
  const double weight_tail = c / (2.0 * static_cast<double>(2 * n_terms - 1));
  return {product, product * std::expm1(slope * weight_tail)};
}

}  // namespace ratio_bounds
