#pragma once

#include <cstdint>
#include <stdexcept>

namespace ratio_bounds {

/// A numeric value together with a rigorous bound on the truncation error
/// |true - value| (rounding excluded). Tail bounds come from integral
/// comparisons on monotone summands, never from term-ratio heuristics.
struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Controls adaptive series summation: hard cap on the number of terms and
/// the truncation error the caller is willing to accept.
struct SeriesConfig {
  std::int64_t max_terms = 1'000'000;
  double target_tail = 1e-14;
};

/// Thrown when a SeriesConfig's target_tail cannot be met within max_terms.
class accuracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void validate(const SeriesConfig& cfg) {
  if (cfg.max_terms < 1) {
    throw std::domain_error("SeriesConfig.max_terms must be >= 1");
  }
  if (!(cfg.target_tail > 0.0)) {
    throw std::domain_error("SeriesConfig.target_tail must be > 0");
  }
}

}  // namespace ratio_bounds
