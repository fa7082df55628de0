#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ratio_bounds/verify.hpp"
#include "json.hpp"

using namespace ratio_bounds;

namespace {

GridSpec small_grid(int points = 8) {
  GridSpec grid;
  grid.points_per_axis = points;
  return grid;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(validate(GridSpec{0, 1e-3, {-1}}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{8, 0.6, {-1}}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{8, 1e-3, {}}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{8, 1e-3, {2, 0}}), std::domain_error);
  CHECK_THROWS_AS(validate(GridSpec{8, 1e-3, {-2}}), std::domain_error);
  CHECK_NOTHROW(validate(GridSpec{}));
}

TEST_CASE("inset_grid geometry") {
  const auto grid = inset_grid(5, 1e-3);
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == doctest::Approx(1e-3));
  CHECK(grid.back() == doctest::Approx(1.0 - 1e-3));
  CHECK(inset_grid(1, 1e-3) == std::vector<double>{0.5});
}

TEST_CASE("verify_lemma passes and counts cases") {
  const auto report = verify_lemma(small_grid(), 1e-12);
  CHECK(report.passed);
  CHECK(report.violations.empty());
  CHECK(report.cases_run == 8 * 8 * 10);
  CHECK(report.worst_margin >= -1e-12);
  CHECK(report.check_name == "lemma_log_bound_dominance");

  GridSpec degenerate = small_grid(1);
  const auto single = verify_lemma(degenerate, 1e-12);
  CHECK(single.cases_run == static_cast<std::int64_t>(degenerate.k0_set.size()));

  GridSpec base_case = small_grid();
  base_case.k0_set = {-1};
  CHECK(verify_lemma(base_case, 1e-12).passed);

  CHECK_THROWS_AS(verify_lemma(small_grid(), 0.0), std::domain_error);
}

TEST_CASE("verify_a_monotone passes; single-point grid hits u = v = 0.5") {
  const auto report = verify_a_monotone(small_grid(), 8, 1e-12);
  CHECK(report.passed);
  CHECK(report.cases_run == 8 * 8 * 9);

  const auto single = verify_a_monotone(small_grid(1), 8, 1e-12);
  CHECK(single.passed);
  CHECK(single.cases_run == 9);
  // worst margin is the smallest gap, which shrinks geometrically in k
  CHECK(single.worst_margin > 0.0);
  CHECK(single.worst_margin < 1e-6);

  CHECK_THROWS_AS(verify_a_monotone(small_grid(), -1, 1e-12), std::domain_error);
}

TEST_CASE("verify_ratio_bounds passes for both families") {
  const auto cc = verify_ratio_bounds(small_grid(), Family::CoshCos, 1e-12);
  CHECK(cc.passed);
  CHECK(cc.cases_run == 8 * 8 * (10 + 9));  // dominance + monotonicity checks
  CHECK(cc.check_name == "coshcos_bound_dominance");

  const auto ss = verify_ratio_bounds(small_grid(), Family::SinhSin, 1e-12);
  CHECK(ss.passed);
  CHECK(ss.cases_run == 8 * 8 * 10);
}

TEST_CASE("verify_limit_bound passes") {
  const auto report = verify_limit_bound(50, 1e-12);
  CHECK(report.passed);
  CHECK(report.cases_run == 50 * 4);  // dominance + three chain alphas per x
  CHECK_THROWS_AS(verify_limit_bound(0, 1e-12), std::domain_error);
}

TEST_CASE("verify_convergence pass and violation paths") {
  CHECK(verify_convergence(0.5, 1.0, 30, 1e-9).passed);
  // a coarse tolerance swallows the order -1 gap
  CHECK(verify_convergence(0.5, 1.0, -1, 0.1).passed);

  const auto failing = verify_convergence(0.5, 1.0, -1, 1e-9);
  CHECK_FALSE(failing.passed);
  CHECK(failing.violations.size() == 2);
  CHECK(failing.worst_margin < 0.0);
}

TEST_CASE("verify_best_constant passes at the default alphas") {
  const auto report = verify_best_constant({0.5, 1.0, 1.4}, 1e-12);
  CHECK(report.passed);
  CHECK(report.worst_margin > 0.0);
  CHECK_THROWS_AS(verify_best_constant({}, 1e-12), std::domain_error);
  CHECK_THROWS_AS(verify_best_constant({2.0}, 1e-12), std::domain_error);
}

TEST_CASE("verify_lambda_sums passes") {
  const auto report = verify_lambda_sums(8, 1e-12);
  CHECK(report.passed);
  CHECK(report.cases_run == 9);
  CHECK_THROWS_AS(verify_lambda_sums(-1, 1e-12), std::domain_error);
}

TEST_CASE("evaluate dispatches on the family") {
  const auto cc = evaluate({0.5, 1.0, 0, Family::CoshCos});
  CHECK(cc.bound == coshcos_bound(0.5, 1.0, 0));
  CHECK(cc.margin == cc.bound - cc.reference);
  CHECK(cc.margin > 0.0);

  const auto ss = evaluate({0.5, 1.0, 0, Family::SinhSin});
  CHECK(ss.bound == sinhsin_bound(0.5, 1.0, 0));
  CHECK(ss.margin > 0.0);
  CHECK_THROWS_AS(evaluate({1.0, 1.0, 0, Family::CoshCos}), std::domain_error);
}

TEST_CASE("reports are deterministic") {
  const auto first = to_json_string(verify_lemma(small_grid(4), 1e-12));
  const auto second = to_json_string(verify_lemma(small_grid(4), 1e-12));
  CHECK(first == second);
}

TEST_CASE("report JSON schema") {
  const auto report = verify_lemma(small_grid(2), 1e-12);
  const auto parsed = nlohmann::json::parse(to_json_string(report));

  REQUIRE(parsed.is_object());
  const std::vector<std::string> expected_keys = {
      "check_name", "grid", "cases_run", "worst_margin",
      "worst_case_inputs", "violations", "passed"};
  CHECK(parsed.size() == expected_keys.size());
  for (const auto& key : expected_keys) {
    CHECK(parsed.contains(key));
  }
  CHECK(parsed["grid"].contains("points_per_axis"));
  CHECK(parsed["grid"].contains("inset"));
  CHECK(parsed["grid"].contains("k0_set"));
  CHECK(parsed["passed"].is_boolean());
  CHECK(parsed["worst_case_inputs"].contains("u"));
  CHECK(parsed["worst_case_inputs"].contains("v"));
  CHECK(parsed["worst_case_inputs"].contains("k0"));

  const auto failing = verify_convergence(0.5, 1.0, -1, 1e-9);
  const auto failing_json = nlohmann::json::parse(to_json_string(failing));
  CHECK(failing_json["passed"] == false);
  REQUIRE(failing_json["violations"].size() == 2);
  CHECK(failing_json["violations"][0].contains("inputs"));
  CHECK(failing_json["violations"][0].contains("margin"));

  // array form
  const auto array = nlohmann::json::parse(
      to_json_string(std::vector<VerificationReport>{report, failing}));
  REQUIRE(array.is_array());
  CHECK(array.size() == 2);
}
