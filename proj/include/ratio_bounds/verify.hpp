#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ratio_bounds/bounds.hpp"
#include "ratio_bounds/truncated.hpp"

namespace ratio_bounds {

/// Sweep geometry. Grids are uniform with an inset from the open-interval
/// endpoints (for an interval (0, B) the points are B*t with t running from
/// inset to 1-inset), so every evaluated case is strictly in-domain.
struct GridSpec {
  int points_per_axis = 64;
  double inset = 1e-3;
  std::vector<int> k0_set = {-1, 0, 1, 2, 3, 4, 5, 6, 7, 8};
};

void validate(const GridSpec& grid);

/// Uniform points inside (0,1): inset .. 1-inset inclusive (midpoint for a
/// single-point grid).
std::vector<double> inset_grid(int points, double inset);

/// Bound vs reference at one point, dispatched on the query's family.
EvalResult evaluate(const RatioQuery& query);

struct Violation {
  std::vector<double> inputs;
  double margin = 0.0;
};

/// Outcome of one sweep. worst_margin is the minimum margin observed; a case
/// becomes a violation when its margin falls below the check's pass rule
/// (usually margin >= -tol; strictly-positive checks violate at <= 0).
/// Margins are absolute for log-scale checks and relative for ratio-scale
/// checks. Ties on the worst margin are broken toward the lexicographically
/// smallest input tuple, so reports are identical however cases are ordered.
struct VerificationReport {
  std::string check_name;
  GridSpec grid;
  std::int64_t cases_run = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<std::string> input_names;
  std::vector<double> worst_case_inputs;
  std::vector<Violation> violations;
  bool passed = true;
};

/// bernoulli_log_bound(u,v,k0) >= log_ratio(u*v) - tol over the (u,v) grid
/// and every k0 in the grid's k0_set.
VerificationReport verify_lemma(const GridSpec& grid, double tol);

/// a_k strictly decreasing: a_gap(u,v,k) > 0 for k = -1..k_max-1, and the
/// direct difference a_k - a_{k+1} matches the closed-form gap within
/// tol + tail_bound, over the (u,v) grid.
VerificationReport verify_a_monotone(const GridSpec& grid, int k_max, double tol);

/// Family bound >= reference ratio (relative margin >= -tol) over the
/// (x = alpha*t, alpha) grid and every k0; for CoshCos the bound must also be
/// non-increasing in k0 within tol.
VerificationReport verify_ratio_bounds(const GridSpec& grid, Family family, double tol);

/// coshcos_limit_bound dominates the ratio on `points` inset points of
/// (0, pi/2), and the order-30 family member stays below the limit bound for
/// sampled alpha.
VerificationReport verify_limit_bound(int points, double tol);

/// |family_bound(x, alpha, k_hi) - reference(x)| <= tol for both families.
VerificationReport verify_convergence(double x, double alpha, int k_hi, double tol);

/// Shrinking the envelope constant by this factor must break dominance near
/// alpha...
inline constexpr double kOptimalityShrink = 1e-6;
/// ...and the witness point alpha*(1 - offset) must sit inside the window
/// where that happens: the shrunken envelope falls below the ratio only for
/// alpha - x < shrink*beta(alpha)/g'(alpha) with g = ln(cosh/cos)/x^2, which
/// is ~5e-7*alpha at alpha = 1.4. An offset of 1e-7 is inside the window for
/// every alpha checked here while the flip margin stays >= ~3e-7, far above
/// double-precision noise.
inline constexpr double kOptimalityWitnessOffset = 1e-7;

/// (i) g(x) = ln(cosh x/cos x)/x^2 non-decreasing on a 200-point grid;
/// (ii) the envelope dominates the ratio on (0, alpha) for each alpha;
/// (iii) the envelope with constant beta*(1 - kOptimalityShrink) falls
/// strictly below the ratio at alpha*(1 - kOptimalityWitnessOffset).
VerificationReport verify_best_constant(const std::vector<double>& alphas, double tol);

/// lambda_sum_closed vs lambda_sum_partial within combined tails + tol,
/// lambda_sum_closed <= lambda_sum_upper, and lambda_sum_closed <= pi^2/8,
/// for k = 0..k_max. The partial sums need a reachable target tail, hence
/// the 1e-12 default here.
VerificationReport verify_lambda_sums(int k_max, double tol,
                                      const SeriesConfig& cfg = {1'000'000, 1e-12});

/// Reports serialize to JSON with exactly the field names of
/// VerificationReport; worst_case_inputs and violation inputs become objects
/// keyed by input_names.
std::string to_json_string(const VerificationReport& report, int indent = -1);
std::string to_json_string(const std::vector<VerificationReport>& reports, int indent = 2);

}  // namespace ratio_bounds
