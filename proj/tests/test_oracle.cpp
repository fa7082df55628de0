#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "ratio_bounds/oracle.hpp"
#include "frozen_values.hpp"

using namespace ratio_bounds;

namespace {
constexpr double kPi = std::numbers::pi;

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}
}  // namespace

TEST_CASE("ratio_coshcos reference values") {
  CHECK(rel_close(ratio_coshcos(0.5), frozen::kRatioCoshcosHalf, 1e-15));
  CHECK(rel_close(ratio_coshcos(1.0), frozen::kRatioCoshcosOne, 1e-15));
  CHECK(ratio_coshcos(1e-9) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(ratio_coshcos(0.0), std::domain_error);
  CHECK_THROWS_AS(ratio_coshcos(kPi / 2.0), std::domain_error);
}

TEST_CASE("ratio_coshcos stays within a few ulp of long double evaluation") {
  std::mt19937_64 rng(192837);
  std::uniform_real_distribution<double> unit(1e-3, 1.0 - 1e-3);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = kPi / 2.0 * unit(rng);
    const double value = ratio_coshcos(x);
    const double reference = static_cast<double>(
        std::cosh(static_cast<long double>(x)) / std::cos(static_cast<long double>(x)));
    CHECK(std::abs(value - reference) <=
          4.0 * std::abs(reference) * std::numeric_limits<double>::epsilon());
  }
}

TEST_CASE("ratio_sinhsin reference values and small-x series path") {
  CHECK(rel_close(ratio_sinhsin(0.5), frozen::kRatioSinhsinHalf, 1e-15));
  CHECK(rel_close(ratio_sinhsin(1.0), frozen::kRatioSinhsinOne, 1e-15));
  CHECK_THROWS_AS(ratio_sinhsin(-0.5), std::domain_error);

  // sinh x/sin x = 1 + x^2/3 + O(x^4)
  const double x = 1e-5;
  CHECK(std::abs(ratio_sinhsin(x) - (1.0 + x * x / 3.0)) < x * x * x * x);

  // the two evaluation paths agree across the 1e-4 switch point
  const double below = ratio_sinhsin(1e-4 * (1.0 - 1e-9));
  const double above = ratio_sinhsin(1e-4 * (1.0 + 1e-9));
  CHECK(std::abs(below - above) < 1e-14);
}

TEST_CASE("ratios strictly increase on (0, pi/2)") {
  double previous_cc = 0.0;
  double previous_ss = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double t = 1e-3 + (1.0 - 2e-3) * i / 199.0;
    const double x = kPi / 2.0 * t;
    const double cc = ratio_coshcos(x);
    const double ss = ratio_sinhsin(x);
    CHECK(cc > previous_cc);
    CHECK(ss > previous_ss);
    previous_cc = cc;
    previous_ss = ss;
  }
}

TEST_CASE("product_coshcos partial products") {
  const auto p1 = product_coshcos(0.5, 1);
  CHECK(rel_close(p1.value, frozen::kProductHalfN1, 1e-15));
  const auto p3 = product_coshcos(0.5, 3);
  CHECK(rel_close(p3.value, frozen::kProductHalfN3, 1e-15));
  CHECK_THROWS_AS(product_coshcos(0.5, 0), std::domain_error);
  CHECK_THROWS_AS(product_coshcos(2.0, 5), std::domain_error);
}

TEST_CASE("product_coshcos increases in the term count") {
  std::mt19937_64 rng(555111);
  std::uniform_real_distribution<double> unit(1e-3, 1.0 - 1e-3);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = kPi / 2.0 * unit(rng);
    const std::int64_t n = 1 + trial % 50;
    CHECK(product_coshcos(x, n + 5).value > product_coshcos(x, n).value);
  }
}

TEST_CASE("product_coshcos brackets the true ratio") {
  for (double x : {0.3, 0.8, 1.3}) {
    const double reference = ratio_coshcos(x);
    for (std::int64_t n : {10, 1000, 100000}) {
      const auto product = product_coshcos(x, n);
      CHECK(product.tail_bound >= 0.0);
      // value <= ratio <= value + tail_bound, up to rounding of the product
      CHECK(reference - product.value >= -1e-13 * reference);
      CHECK(reference - product.value <= product.tail_bound);
    }
  }
}
