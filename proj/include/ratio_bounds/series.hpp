#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ratio_bounds/compensated.hpp"
#include "ratio_bounds/truncated.hpp"

namespace ratio_bounds {

namespace detail {

inline void require_open_unit(double v, const char* name) {
  if (!(v > 0.0) || !(v < 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in (0,1)");
  }
}

}  // namespace detail

/// ln((1+v)/(1-v)) for v in (0,1); identical to 2*atanh(v).
inline double log_ratio(double v) {
  detail::require_open_unit(v, "v");
  return 2.0 * std::atanh(v);
}

/// Partial sum of the atanh series: sum_{k=0}^{k0} a^{2k+1}/(2k+1).
/// k0 = -1 is the empty sum (value 0).
inline double partial_sum_S(double a, int k0) {
  detail::require_open_unit(a, "a");
  if (k0 < -1) {
    throw std::domain_error("k0 must be >= -1");
  }
  const double a2 = a * a;
  CompensatedSum<double> acc;
  double power = a;  // a^{2k+1}
  for (int k = 0; k <= k0; ++k) {
    acc.add(power / static_cast<double>(2 * k + 1));
    power *= a2;
  }
  return acc.value();
}

/// zeta(2m) for m >= 1. zeta(2) and zeta(6) are analytic constants; other
/// arguments use direct summation with the Euler-Maclaurin tail correction
///   sum_{n=N}^{inf} n^{-s} = N^{1-s}/(s-1) + N^{-s}/2 + theta*(s/12)N^{-s-1},
/// theta in (0,1), so the reported tail bound (s/12)N^{-s-1} is rigorous.
inline TruncatedValue zeta_even(int m, const SeriesConfig& cfg = {}) {
  if (m < 1) {
    throw std::domain_error("m must be >= 1");
  }
  validate(cfg);
  constexpr double pi = std::numbers::pi;
  if (m == 1) {
    return {pi * pi / 6.0, 0.0};
  }
  if (m == 3) {
    const double pi2 = pi * pi;
    return {pi2 * pi2 * pi2 / 945.0, 0.0};
  }

  const double s = 2.0 * static_cast<double>(m);
  const auto tail_at = [s](double n) { return s / 12.0 * std::pow(n, -s - 1.0); };

  std::int64_t boundary = 8;
  while (tail_at(static_cast<double>(boundary)) > cfg.target_tail && boundary < cfg.max_terms) {
    boundary *= 2;
  }
  if (boundary > cfg.max_terms) {
    boundary = cfg.max_terms;
  }
  const double tail = tail_at(static_cast<double>(boundary));
  if (tail > cfg.target_tail) {
    throw accuracy_error("zeta_even: target_tail unreachable within max_terms");
  }

  CompensatedSum<double> acc;
  for (std::int64_t n = 1; n < boundary; ++n) {
    acc.add(std::pow(static_cast<double>(n), -s));
  }
  const double nb = static_cast<double>(boundary);
  acc.add(std::pow(nb, 1.0 - s) / (s - 1.0));
  acc.add(0.5 * std::pow(nb, -s));
  return {acc.value(), tail};
}

/// I_k = sum_{n>=1} (2n-1)^{-(4k+2)} by direct summation. The omitted tail
/// T is bracketed by integrals, f(N+1) <= T <= f(N) with
/// f(y) = (2y-1)^{1-s}/(2(s-1)); the midpoint is added to the sum and half
/// the bracket width is the reported tail bound.
inline TruncatedValue lambda_sum_partial(int k, const SeriesConfig& cfg = {}) {
  if (k < 0) {
    throw std::domain_error("k must be >= 0");
  }
  validate(cfg);
  const double s = 4.0 * static_cast<double>(k) + 2.0;
  const auto integral_from = [s](double y) {
    return std::pow(2.0 * y - 1.0, 1.0 - s) / (2.0 * (s - 1.0));
  };
  const auto tail_at = [&](std::int64_t n) {
    const double y = static_cast<double>(n);
    return 0.5 * (integral_from(y) - integral_from(y + 1.0));
  };

  std::int64_t terms = 8;
  while (tail_at(terms) > cfg.target_tail && terms < cfg.max_terms) {
    terms *= 2;
  }
  if (terms > cfg.max_terms) {
    terms = cfg.max_terms;
  }
  const double tail = tail_at(terms);
  if (tail > cfg.target_tail) {
    throw accuracy_error("lambda_sum_partial: target_tail unreachable within max_terms");
  }

  CompensatedSum<double> acc;
  for (std::int64_t n = 1; n <= terms; ++n) {
    const double d = static_cast<double>(2 * n - 1);
    const double inv = 1.0 / (d * d);
    double term = inv;  // (2n-1)^{-(4k+2)} = inv^{2k+1}
    for (int j = 0; j < 2 * k; ++j) {
      term *= inv;
    }
    acc.add(term);
  }
  const double y = static_cast<double>(terms);
  acc.add(0.5 * (integral_from(y) + integral_from(y + 1.0)));
  return {acc.value(), tail};
}

/// Closed form I_k = (1 - 2^{-(4k+2)}) * zeta(4k+2).
inline double lambda_sum_closed(int k) {
  if (k < 0) {
    throw std::domain_error("k must be >= 0");
  }
  const std::int64_t s = 4ll * k + 2;
  const double two_pow = s > 1100 ? 0.0 : std::ldexp(1.0, -static_cast<int>(s));
  return (1.0 - two_pow) * zeta_even(2 * k + 1).value;
}

/// Rational upper bound I_k <= (1 - 2^{-(4k+2)}) / (1 - 2^{-(4k+1)}).
inline double lambda_sum_upper(int k) {
  if (k < 0) {
    throw std::domain_error("k must be >= 0");
  }
  const std::int64_t s = 4ll * k + 2;
  const double num = 1.0 - (s > 1100 ? 0.0 : std::ldexp(1.0, -static_cast<int>(s)));
  const double den = 1.0 - (s - 1 > 1100 ? 0.0 : std::ldexp(1.0, -static_cast<int>(s - 1)));
  return num / den;
}

}  // namespace ratio_bounds
