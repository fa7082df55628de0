#include "ratio_bounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "ratio_bounds/oracle.hpp"
#include "json.hpp"

namespace ratio_bounds {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Alpha positions (as fractions of the remaining (x, pi/2) interval) at which
// the order-30 family member is compared against the limit bound. The family
// converges to the ratio pointwise, not uniformly in alpha: with alpha in the
// top of (x, pi/2) and x near pi/2, (x/alpha)^126 is still ~0.9 and the
// order-30 member legitimately exceeds the limit bound. Fractions up to 1/2
// keep the comparison inside the regime where order 30 has converged.
constexpr double kChainFractions[] = {0.1, 0.25, 0.5};

constexpr int kMonotonePoints = 200;

void require_positive_tol(double tol) {
  if (!(tol > 0.0)) {
    throw std::domain_error("tol must be > 0");
  }
}

// Min-margin reduction with deterministic lexicographic tie-breaking on the
// input tuple, so reports do not depend on evaluation order.
class MarginReducer {
 public:
  explicit MarginReducer(std::vector<std::string> input_names)
      : input_names_(std::move(input_names)) {}

  void observe(double margin, std::vector<double> inputs, bool violation) {
    ++cases_;
    if (margin < worst_ ||
        (margin == worst_ &&
         std::lexicographical_compare(inputs.begin(), inputs.end(),
                                      worst_inputs_.begin(), worst_inputs_.end()))) {
      worst_ = margin;
      worst_inputs_ = inputs;
    }
    if (violation) {
      violations_.push_back({std::move(inputs), margin});
    }
  }

  VerificationReport finish(std::string check_name, GridSpec grid) {
    VerificationReport report;
    report.check_name = std::move(check_name);
    report.grid = std::move(grid);
    report.cases_run = cases_;
    report.worst_margin = worst_;
    report.input_names = std::move(input_names_);
    report.worst_case_inputs = std::move(worst_inputs_);
    report.violations = std::move(violations_);
    report.passed = report.violations.empty();
    return report;
  }

 private:
  std::vector<std::string> input_names_;
  std::int64_t cases_ = 0;
  double worst_ = std::numeric_limits<double>::infinity();
  std::vector<double> worst_inputs_;
  std::vector<Violation> violations_;
};

double g_of(double x) { return detail::ln_ratio_coshcos(x) / (x * x); }

}  // namespace

EvalResult evaluate(const RatioQuery& query) {
  const bool coshcos = query.family == Family::CoshCos;
  const double bound = coshcos ? coshcos_bound(query.x, query.alpha, query.k0)
                               : sinhsin_bound(query.x, query.alpha, query.k0);
  const double reference = coshcos ? ratio_coshcos(query.x) : ratio_sinhsin(query.x);
  return {bound, reference, bound - reference};
}

void validate(const GridSpec& grid) {
  if (grid.points_per_axis < 1) {
    throw std::domain_error("GridSpec.points_per_axis must be >= 1");
  }
  if (!(grid.inset > 0.0) || !(grid.inset < 0.5)) {
    throw std::domain_error("GridSpec.inset must lie in (0, 0.5)");
  }
  if (grid.k0_set.empty()) {
    throw std::domain_error("GridSpec.k0_set must be non-empty");
  }
  if (!std::is_sorted(grid.k0_set.begin(), grid.k0_set.end())) {
    throw std::domain_error("GridSpec.k0_set must be sorted ascending");
  }
  for (int k0 : grid.k0_set) {
    detail::require_order(k0);
  }
}

std::vector<double> inset_grid(int points, double inset) {
  if (points == 1) {
    return {0.5};
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  const double step = (1.0 - 2.0 * inset) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    grid.push_back(inset + step * static_cast<double>(i));
  }
  return grid;
}

VerificationReport verify_lemma(const GridSpec& grid, double tol) {
  validate(grid);
  require_positive_tol(tol);
  const auto axis = inset_grid(grid.points_per_axis, grid.inset);
  MarginReducer reducer({"u", "v", "k0"});
  for (double u : axis) {
    for (double v : axis) {
      const double reference = log_ratio(u * v);
      for (int k0 : grid.k0_set) {
        const double margin = bernoulli_log_bound(u, v, k0) - reference;
        reducer.observe(margin, {u, v, static_cast<double>(k0)}, margin < -tol);
      }
    }
  }
  return reducer.finish("lemma_log_bound_dominance", grid);
}

VerificationReport verify_a_monotone(const GridSpec& grid, int k_max, double tol) {
  validate(grid);
  require_positive_tol(tol);
  if (k_max < 0 || k_max > kMaxOrder) {
    throw std::domain_error("k_max must lie in [0, 64]");
  }
  const auto axis = inset_grid(grid.points_per_axis, grid.inset);
  MarginReducer reducer({"u", "v", "k"});
  for (double u : axis) {
    for (double v : axis) {
      const auto seq = a_sequence(u, v, k_max);
      for (int k = -1; k < k_max; ++k) {
        const TruncatedValue gap = a_gap(u, v, k);
        const double direct = seq[static_cast<std::size_t>(k + 1)] -
                              seq[static_cast<std::size_t>(k + 2)];
        const double identity_slack =
            (tol + gap.tail_bound) - std::abs(direct - gap.value);
        const double margin = std::min(gap.value, identity_slack);
        reducer.observe(margin, {u, v, static_cast<double>(k)},
                        !(gap.value > 0.0) || identity_slack < 0.0);
      }
    }
  }
  return reducer.finish("a_sequence_strict_decrease", grid);
}

VerificationReport verify_ratio_bounds(const GridSpec& grid, Family family, double tol) {
  validate(grid);
  require_positive_tol(tol);
  const auto axis = inset_grid(grid.points_per_axis, grid.inset);
  MarginReducer reducer({"x", "alpha", "k0"});
  for (double s : axis) {
    const double alpha = kHalfPi * s;
    for (double t : axis) {
      const double x = alpha * t;
      const double reference =
          family == Family::CoshCos ? ratio_coshcos(x) : ratio_sinhsin(x);
      double previous = 0.0;
      bool have_previous = false;
      for (int k0 : grid.k0_set) {
        const double bound = family == Family::CoshCos ? coshcos_bound(x, alpha, k0)
                                                       : sinhsin_bound(x, alpha, k0);
        const double margin = (bound - reference) / reference;
        reducer.observe(margin, {x, alpha, static_cast<double>(k0)}, margin < -tol);
        if (family == Family::CoshCos && have_previous) {
          const double mono_margin = (previous - bound) / bound;
          reducer.observe(mono_margin, {x, alpha, static_cast<double>(k0)},
                          mono_margin < -tol);
        }
        previous = bound;
        have_previous = true;
      }
    }
  }
  return reducer.finish(family == Family::CoshCos ? "coshcos_bound_dominance"
                                                  : "sinhsin_bound_dominance",
                        grid);
}

VerificationReport verify_limit_bound(int points, double tol) {
  require_positive_tol(tol);
  GridSpec grid;
  grid.points_per_axis = points;
  grid.k0_set = {30};
  validate(grid);
  const auto axis = inset_grid(points, grid.inset);
  MarginReducer reducer({"x", "alpha"});
  for (double t : axis) {
    const double x = kHalfPi * t;
    const double reference = ratio_coshcos(x);
    const double limit = coshcos_limit_bound(x);
    const double margin = (limit - reference) / reference;
    reducer.observe(margin, {x, 0.0}, margin < -tol);
    for (double fraction : kChainFractions) {
      const double alpha = x + (kHalfPi - x) * fraction;
      const double chain_margin = (limit - coshcos_bound(x, alpha, 30)) / reference;
      reducer.observe(chain_margin, {x, alpha}, chain_margin < -tol);
    }
  }
  return reducer.finish("limit_bound_dominance", grid);
}

VerificationReport verify_convergence(double x, double alpha, int k_hi, double tol) {
  require_positive_tol(tol);
  GridSpec grid;
  grid.points_per_axis = 1;
  grid.k0_set = {k_hi};
  MarginReducer reducer({"x", "alpha", "k_hi", "family"});
  const double cc_gap = std::abs(coshcos_bound(x, alpha, k_hi) - ratio_coshcos(x));
  reducer.observe(tol - cc_gap, {x, alpha, static_cast<double>(k_hi), 0.0},
                  cc_gap > tol);
  const double ss_gap = std::abs(sinhsin_bound(x, alpha, k_hi) - ratio_sinhsin(x));
  reducer.observe(tol - ss_gap, {x, alpha, static_cast<double>(k_hi), 1.0},
                  ss_gap > tol);
  return reducer.finish("family_convergence", grid);
}

VerificationReport verify_best_constant(const std::vector<double>& alphas, double tol) {
  require_positive_tol(tol);
  if (alphas.empty()) {
    throw std::domain_error("alphas must be non-empty");
  }
  for (double alpha : alphas) {
    if (!(alpha > 0.0) || !(alpha < kHalfPi)) {
      throw std::domain_error("every alpha must lie in (0, pi/2)");
    }
  }
  GridSpec grid;
  grid.points_per_axis = kMonotonePoints;
  grid.k0_set = {-1};
  MarginReducer reducer({"x", "alpha"});

  const auto axis = inset_grid(kMonotonePoints, grid.inset);
  double previous_g = 0.0;
  bool have_previous = false;
  for (double t : axis) {
    const double x = kHalfPi * t;
    const double g = g_of(x);
    if (have_previous) {
      const double margin = g - previous_g;
      reducer.observe(margin, {x, 0.0}, margin < -tol);
    }
    previous_g = g;
    have_previous = true;
  }

  for (double alpha : alphas) {
    for (double t : axis) {
      const double x = alpha * t;
      const double reference = ratio_coshcos(x);
      const double margin = (exp_envelope(x, alpha) - reference) / reference;
      reducer.observe(margin, {x, alpha}, margin < -tol);
    }
    const double gamma = best_exp_constant(alpha) * (1.0 - kOptimalityShrink);
    const double witness = alpha * (1.0 - kOptimalityWitnessOffset);
    const double reference = ratio_coshcos(witness);
    const double flip_margin = (reference - std::exp(gamma * witness * witness)) / reference;
    reducer.observe(flip_margin, {witness, alpha}, !(flip_margin > 0.0));
  }
  return reducer.finish("best_constant_optimality", grid);
}

VerificationReport verify_lambda_sums(int k_max, double tol, const SeriesConfig& cfg) {
  require_positive_tol(tol);
  if (k_max < 0) {
    throw std::domain_error("k_max must be >= 0");
  }
  GridSpec grid;
  grid.points_per_axis = k_max + 1;
  grid.k0_set = {0};
  constexpr double pi = std::numbers::pi;
  MarginReducer reducer({"k"});
  for (int k = 0; k <= k_max; ++k) {
    const TruncatedValue partial = lambda_sum_partial(k, cfg);
    const double closed = lambda_sum_closed(k);
    const double zeta_tail = zeta_even(2 * k + 1).tail_bound;
    const double identity_slack =
        (tol + partial.tail_bound + zeta_tail) - std::abs(closed - partial.value);
    const double upper_gap = lambda_sum_upper(k) - closed;
    const double cap_gap = pi * pi / 8.0 - closed;
    const double margin = std::min({identity_slack, upper_gap, cap_gap});
    reducer.observe(margin, {static_cast<double>(k)},
                    identity_slack < 0.0 || upper_gap < -tol || cap_gap < -tol);
  }
  return reducer.finish("lambda_sum_identities", grid);
}

namespace {

nlohmann::ordered_json inputs_object(const std::vector<std::string>& names,
                                     const std::vector<double>& values) {
  nlohmann::ordered_json object = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < values.size() && i < names.size(); ++i) {
    object[names[i]] = values[i];
  }
  return object;
}

nlohmann::ordered_json report_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["check_name"] = report.check_name;
  j["grid"] = {{"points_per_axis", report.grid.points_per_axis},
               {"inset", report.grid.inset},
               {"k0_set", report.grid.k0_set}};
  j["cases_run"] = report.cases_run;
  j["worst_margin"] = report.worst_margin;
  j["worst_case_inputs"] = inputs_object(report.input_names, report.worst_case_inputs);
  auto violations = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"inputs", inputs_object(report.input_names, v.inputs)},
                          {"margin", v.margin}});
  }
  j["violations"] = std::move(violations);
  j["passed"] = report.passed;
  return j;
}

}  // namespace

std::string to_json_string(const VerificationReport& report, int indent) {
  return report_json(report).dump(indent);
}

std::string to_json_string(const std::vector<VerificationReport>& reports, int indent) {
  auto array = nlohmann::ordered_json::array();
  for (const VerificationReport& report : reports) {
    array.push_back(report_json(report));
  }
  return array.dump(indent);
}

}  // namespace ratio_bounds
