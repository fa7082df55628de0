#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ratio_bounds/series.hpp"
#include "ratio_bounds/truncated.hpp"

namespace ratio_bounds {

/// Hard cap on the refinement order k0 accepted by the public API; keeps the
/// power bookkeeping finite, and (x/alpha)^{4k0+6} has underflowed to the
/// converged value long before this for any x/alpha away from 1.
inline constexpr int kMaxOrder = 64;

enum class Family { CoshCos, SinhSin };

/// Source of the I_k coefficients inside coshcos_bound. Partial exists for
/// cross-checks against the closed zeta form.
enum class LambdaSource { Closed, Partial };

/// Point at which the refined log inequality is evaluated.
struct LemmaQuery {
  double u = 0.0;
  double v = 0.0;
  int k0 = -1;
};

/// Point for a cosh/cos or sinh/sin bound evaluation.
struct RatioQuery {
  double x = 0.0;
  double alpha = 0.0;
  int k0 = -1;
  Family family = Family::CoshCos;
};

/// Bound value next to the reference it must dominate.
struct EvalResult {
  double bound = 0.0;
  double reference = 0.0;
  double margin = 0.0;  // bound - reference
};

namespace detail {

inline void require_order(int k0, const char* name = "k0") {
  if (k0 < -1 || k0 > kMaxOrder) {
    throw std::domain_error(std::string(name) + " must lie in [-1, 64]");
  }
}

inline void validate(const LemmaQuery& q) {
  require_open_unit(q.u, "u");
  require_open_unit(q.v, "v");
  require_order(q.k0);
}

inline void require_wedge(double x, double alpha) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (!(x > 0.0) || !(x < alpha) || !(alpha < half_pi)) {
    throw std::domain_error("require 0 < x < alpha < pi/2");
  }
}

inline double ln_ratio_coshcos(double a) {
  return std::log(std::cosh(a)) - std::log(std::cos(a));
}

inline double ln_ratio_sinhsin(double a) {
  return std::log(std::sinh(a)) - std::log(std::sin(a));
}

/// I_k for k = 0..kMaxOrder, computed once from the closed zeta form.
inline const std::array<double, kMaxOrder + 1>& lambda_closed_table() {
  static const std::array<double, kMaxOrder + 1> table = [] {
    std::array<double, kMaxOrder + 1> t{};
    for (int k = 0; k <= kMaxOrder; ++k) {
      t[static_cast<std::size_t>(k)] = lambda_sum_closed(k);
    }
    return t;
  }();
  return table;
}

/// zeta(4k+2) for k = 0..kMaxOrder.
inline const std::array<double, kMaxOrder + 1>& zeta_4k2_table() {
  static const std::array<double, kMaxOrder + 1> table = [] {
    std::array<double, kMaxOrder + 1> t{};
    for (int k = 0; k <= kMaxOrder; ++k) {
      t[static_cast<std::size_t>(k)] = zeta_even(2 * k + 1).value;
    }
    return t;
  }();
  return table;
}

/// Shared evaluator for both bound families:
///   base^{r^{4k0+6}} * exp{ 2 sum_{k=0}^{k0} w^{2k+1} [r^{4k+2} - r^{4k0+6}]
///                           coeff_k / (2k+1) }
/// Powers grow by repeated multiplication from r^2 and w; the whole log-scale
/// value is assembled first and exponentiated once, which preserves the
/// monotonicity of the family at machine precision.
template <typename CoeffFn>
inline double family_bound(double x, double alpha, int k0, double ln_base, double w,
                           CoeffFn&& coeff) {
  const double r = x / alpha;
  const double r2 = r * r;
  const double r4 = r2 * r2;
  double top_power = r2;  // r^{4k0+6}
  for (int k = 0; k <= k0; ++k) {
    top_power *= r4;
  }

  CompensatedSum<double> acc;
  const double w2 = w * w;
  double w_power = w;   // w^{2k+1}
  double r_power = r2;  // r^{4k+2}
  for (int k = 0; k <= k0; ++k) {
    acc.add(w_power * (r_power - top_power) * coeff(k) /
            static_cast<double>(2 * k + 1));
    w_power *= w2;
    r_power *= r4;
  }
  return std::exp(top_power * ln_base + 2.0 * acc.value());
}

}  // namespace detail

/// Right-hand side of the refined Bernoulli-type log inequality:
///   2 sum_{k=0}^{k0} v^{2k+1} [u^{2k+1} - u^{2k0+3}]/(2k+1)
///     + u^{2k0+3} ln((1+v)/(1-v)),
/// an upper bound for ln((1+uv)/(1-uv)). k0 = -1 reduces to u*log_ratio(v).
inline double bernoulli_log_bound(const LemmaQuery& q) {
  detail::validate(q);
  const double u2 = q.u * q.u;
  const double v2 = q.v * q.v;
  double top_power = q.u;  // u^{2k0+3}
  for (int k = 0; k <= q.k0; ++k) {
    top_power *= u2;
  }
  CompensatedSum<double> acc;
  double u_power = q.u;  // u^{2k+1}
  double v_power = q.v;  // v^{2k+1}
  for (int k = 0; k <= q.k0; ++k) {
    acc.add(v_power * (u_power - top_power) / static_cast<double>(2 * k + 1));
    u_power *= u2;
    v_power *= v2;
  }
  return 2.0 * acc.value() + top_power * log_ratio(q.v);
}

inline double bernoulli_log_bound(double u, double v, int k0) {
  return bernoulli_log_bound(LemmaQuery{u, v, k0});
}

/// Exponential form: an upper bound for (1+uv)/(1-uv).
inline double bernoulli_ratio_bound(const LemmaQuery& q) {
  return std::exp(bernoulli_log_bound(q));
}

inline double bernoulli_ratio_bound(double u, double v, int k0) {
  return bernoulli_ratio_bound(LemmaQuery{u, v, k0});
}

/// The strictly decreasing sequence a_{-1}, a_0, ..., a_{k_max} of lemma
/// right-hand sides at fixed (u, v).
inline std::vector<double> a_sequence(double u, double v, int k_max) {
  detail::require_open_unit(u, "u");
  detail::require_open_unit(v, "v");
  detail::require_order(k_max, "k_max");
  std::vector<double> seq;
  seq.reserve(static_cast<std::size_t>(k_max + 2));
  for (int k = -1; k <= k_max; ++k) {
    seq.push_back(bernoulli_log_bound(u, v, k));
  }
  return seq;
}

/// Closed-form gap a_k - a_{k+1} = 2 u^{2k+3} (1-u^2) sum_{j>=k+2} v^{2j+1}/(2j+1).
/// The tail sum is accumulated term by term (summing the series directly keeps
/// the gap strictly positive where the equivalent (1/2)log_ratio(v) - S_{k+1}(v)
/// difference would cancel to zero); the geometric remainder
///   sum_{j>J} v^{2j+1}/(2j+1) <= v^{2J+3} / ((2J+3)(1-v^2))
/// scaled by the prefactor is the reported tail bound.
inline TruncatedValue a_gap(double u, double v, int k, const SeriesConfig& cfg = {}) {
  detail::require_open_unit(u, "u");
  detail::require_open_unit(v, "v");
  if (k < -1 || k > kMaxOrder - 1) {
    throw std::domain_error("k must lie in [-1, 63]");
  }
  validate(cfg);

  const double u2 = u * u;
  double prefactor = 2.0 * u * (1.0 - u2);  // 2 u^{2k+3} (1-u^2)
  for (int j = 0; j <= k; ++j) {
    prefactor *= u2;
  }

  const double v2 = v * v;
  double v_power = v;  // v^{2j+1}
  for (int j = 0; j < k + 2; ++j) {
    v_power *= v2;
  }

  CompensatedSum<double> acc;
  std::int64_t terms = 0;
  double remainder = 0.0;
  for (std::int64_t j = k + 2;; ++j) {
    acc.add(v_power / static_cast<double>(2 * j + 1));
    v_power *= v2;
    ++terms;
    remainder = prefactor * v_power / (static_cast<double>(2 * j + 3) * (1.0 - v2));
    if (remainder <= cfg.target_tail || terms >= cfg.max_terms) {
      break;
    }
  }
  return {prefactor * acc.value(), remainder};
}

/// b_{k0}: upper bound for cosh x/cos x, non-increasing in the refinement
/// order k0 and reducing to the exponential envelope at k0 = -1.
inline double coshcos_bound(double x, double alpha, int k0,
                            LambdaSource source = LambdaSource::Closed) {
  detail::require_wedge(x, alpha);
  detail::require_order(k0);
  constexpr double pi = std::numbers::pi;
  const double w = 4.0 * alpha * alpha / (pi * pi);
  const double ln_base = detail::ln_ratio_coshcos(alpha);
#ifdef RATIO_BOUNDS_MUTATE_COSHCOS_SIGN
  // Mutation seam: flips the sign of the series coefficients so the test
  // suite can prove the verification sweeps detect a broken formula. Never
  // defined in real builds.
  constexpr double mutation = -1.0;
#else
  constexpr double mutation = 1.0;
#endif
  if (source == LambdaSource::Closed) {
    const auto& table = detail::lambda_closed_table();
    return detail::family_bound(x, alpha, k0, ln_base, w, [&](int k) {
      return mutation * table[static_cast<std::size_t>(k)];
    });
  }
  const SeriesConfig cross_check_cfg{1'000'000, 1e-12};
  return detail::family_bound(x, alpha, k0, ln_base, w, [&](int k) {
    return mutation * lambda_sum_partial(k, cross_check_cfg).value;
  });
}

/// Upper bound for sinh x/sin x of the same shape, with zeta(4k+2)
/// coefficients and w = alpha^2/pi^2.
inline double sinhsin_bound(double x, double alpha, int k0) {
  detail::require_wedge(x, alpha);
  detail::require_order(k0);
  constexpr double pi = std::numbers::pi;
  const double w = alpha * alpha / (pi * pi);
  const auto& table = detail::zeta_4k2_table();
  return detail::family_bound(x, alpha, k0, detail::ln_ratio_sinhsin(alpha), w,
                              [&](int k) { return table[static_cast<std::size_t>(k)]; });
}

/// k0 -> infinity limit of the cosh/cos family:
///   ((pi^2 + 4x^2)/(pi^2 - 4x^2))^{pi^2/8}.
inline double coshcos_limit_bound(double x) {
  constexpr double pi = std::numbers::pi;
  if (!(x > 0.0) || !(x < pi / 2.0)) {
    throw std::domain_error("x must lie in (0, pi/2)");
  }
  const double pi2 = pi * pi;
  const double den = pi2 - 4.0 * x * x;
  if (!(den > 0.0)) {
    throw std::domain_error("x too close to pi/2: pi^2 - 4x^2 vanished");
  }
  return std::exp(pi2 / 8.0 * std::log((pi2 + 4.0 * x * x) / den));
}

/// Best exponential constant: beta = ln(cosh alpha/cos alpha)/alpha^2, the
/// smallest gamma with cosh x/cos x <= e^{gamma x^2} on (0, alpha).
inline double best_exp_constant(double alpha) {
  constexpr double pi = std::numbers::pi;
  if (!(alpha > 0.0) || !(alpha < pi / 2.0)) {
    throw std::domain_error("alpha must lie in (0, pi/2)");
  }
  return detail::ln_ratio_coshcos(alpha) / (alpha * alpha);
}

/// e^{beta x^2} with beta = best_exp_constant(alpha). Same formula as the
/// k0 = -1 member of the cosh/cos family, so it is evaluated through the
/// same code path and agrees with it bit for bit.
inline double exp_envelope(double x, double alpha) {
  return coshcos_bound(x, alpha, -1);
}

}  // namespace ratio_bounds
