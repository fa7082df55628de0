// Command-line front end: evaluate any bound at a point, run the verification
// sweeps, or emit sweep data (CSV/JSON) for plotting.
//
// Exit codes: 0 success / all checks passed, 1 verification violation,
// 2 usage or domain error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ratio_bounds/bounds.hpp"
#include "ratio_bounds/oracle.hpp"
#include "ratio_bounds/series.hpp"
#include "ratio_bounds/verify.hpp"

namespace {

using nlohmann::ordered_json;
namespace rb = ratio_bounds;

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void print_eval(double bound, std::optional<double> reference) {
  ordered_json j;
  j["bound"] = bound;
  if (reference) {
    j["reference"] = *reference;
    j["margin"] = bound - *reference;
  }
  std::cout << j.dump() << "\n";
}

std::vector<int> parse_k0_list(const std::string& text) {
  std::vector<int> k0s;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t consumed = 0;
    int value = 0;
    try {
      value = std::stoi(item, &consumed);
    } catch (const std::exception&) {
      throw std::domain_error("--k0-list: cannot parse '" + item + "'");
    }
    if (consumed != item.size()) {
      throw std::domain_error("--k0-list: cannot parse '" + item + "'");
    }
    k0s.push_back(value);
  }
  if (k0s.empty()) {
    throw std::domain_error("--k0-list must name at least one k0");
  }
  return k0s;
}

rb::SeriesConfig series_config_from_env() {
  rb::SeriesConfig cfg{1'000'000, 1e-12};
  if (const char* raw = std::getenv("RATIO_BOUNDS_MAX_TERMS")) {
    try {
      cfg.max_terms = std::stoll(raw);
    } catch (const std::exception&) {
      throw std::domain_error("RATIO_BOUNDS_MAX_TERMS must be an integer");
    }
  }
  return cfg;
}

int run_verify(const std::string& suite, int grid_points, double tol, bool tol_given,
               const std::string& out_path) {
  rb::GridSpec grid;
  grid.points_per_axis = grid_points;
  const double check_tol = tol_given ? tol : 1e-12;
  // The convergence check compares against a reference, not an inequality, so
  // it keeps its own documented default tolerance.
  const double convergence_tol = tol_given ? tol : 1e-9;

  std::vector<rb::VerificationReport> reports;
  const bool all = suite == "all";
  if (all || suite == "lemma") {
    reports.push_back(rb::verify_lemma(grid, check_tol));
  }
  if (all || suite == "a-monotone") {
    reports.push_back(rb::verify_a_monotone(grid, 8, check_tol));
  }
  if (all || suite == "ratio") {
    reports.push_back(rb::verify_ratio_bounds(grid, rb::Family::CoshCos, check_tol));
    reports.push_back(rb::verify_ratio_bounds(grid, rb::Family::SinhSin, check_tol));
  }
  if (all || suite == "limit") {
    reports.push_back(rb::verify_limit_bound(200, check_tol));
  }
  if (all || suite == "convergence") {
    reports.push_back(rb::verify_convergence(0.5, 1.0, 30, convergence_tol));
  }
  if (all || suite == "best-constant") {
    reports.push_back(rb::verify_best_constant({0.5, 1.0, 1.4}, check_tol));
  }
  if (all || suite == "lambda") {
    reports.push_back(rb::verify_lambda_sums(8, check_tol, series_config_from_env()));
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << rb::to_json_string(reports) << "\n";
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
  }

  bool all_passed = true;
  for (const auto& report : reports) {
    std::printf("%s: %s cases=%lld worst_margin=%.6g violations=%zu\n",
                report.check_name.c_str(), report.passed ? "PASS" : "FAIL",
                static_cast<long long>(report.cases_run), report.worst_margin,
                report.violations.size());
    all_passed = all_passed && report.passed;
  }
  return all_passed ? 0 : 1;
}

int run_sweep(const std::string& family_name, double alpha, const std::string& k0_list,
              int points, const std::string& format) {
  const rb::Family family =
      family_name == "coshcos" ? rb::Family::CoshCos : rb::Family::SinhSin;
  const std::vector<int> k0s = parse_k0_list(k0_list);
  for (int k0 : k0s) {
    if (k0 < -1 || k0 > rb::kMaxOrder) {
      throw std::domain_error("--k0-list entries must lie in [-1, 64]");
    }
  }

  std::vector<std::string> columns = {"x", "reference"};
  for (int k0 : k0s) {
    columns.push_back("b_k" + std::to_string(k0));
  }
  if (family == rb::Family::CoshCos) {
    columns.push_back("limit");
    columns.push_back("envelope");
  }

  const auto t_grid = rb::inset_grid(points, 1e-3);
  std::vector<std::vector<double>> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    const double x = alpha * t;
    std::vector<double> row = {x, family == rb::Family::CoshCos
                                      ? rb::ratio_coshcos(x)
                                      : rb::ratio_sinhsin(x)};
    for (int k0 : k0s) {
      row.push_back(family == rb::Family::CoshCos ? rb::coshcos_bound(x, alpha, k0)
                                                  : rb::sinhsin_bound(x, alpha, k0));
    }
    if (family == rb::Family::CoshCos) {
      row.push_back(rb::coshcos_limit_bound(x));
      row.push_back(rb::exp_envelope(x, alpha));
    }
    rows.push_back(std::move(row));
  }

  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::cout << (i ? "," : "") << columns[i];
    }
    std::cout << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::cout << (i ? "," : "") << format_number(row[i]);
      }
      std::cout << "\n";
    }
  } else {
    auto array = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json object;
      for (std::size_t i = 0; i < columns.size(); ++i) {
        object[columns[i]] = row[i];
      }
      array.push_back(std::move(object));
    }
    std::cout << array.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified upper bounds for cosh x/cos x and sinh x/sin x"};
  app.require_subcommand(1);

  // --- eval ---
  auto* eval = app.add_subcommand("eval", "Evaluate one bound at a point (JSON)");
  eval->require_subcommand(1);
  double u = 0, v = 0, x = 0, alpha = 0;
  int k0 = -1, lambda_k = 0;

  auto* lemma = eval->add_subcommand("lemma", "Refined log inequality bound");
  lemma->add_option("--u", u)->required();
  lemma->add_option("--v", v)->required();
  lemma->add_option("--k0", k0)->required();

  auto* coshcos = eval->add_subcommand("coshcos", "cosh x/cos x family bound");
  coshcos->add_option("--x", x)->required();
  coshcos->add_option("--alpha", alpha)->required();
  coshcos->add_option("--k0", k0)->required();

  auto* sinhsin = eval->add_subcommand("sinhsin", "sinh x/sin x family bound");
  sinhsin->add_option("--x", x)->required();
  sinhsin->add_option("--alpha", alpha)->required();
  sinhsin->add_option("--k0", k0)->required();

  auto* limit = eval->add_subcommand("limit", "Limit bound ((pi^2+4x^2)/(pi^2-4x^2))^{pi^2/8}");
  limit->add_option("--x", x)->required();

  auto* envelope = eval->add_subcommand("envelope", "Exponential envelope e^{beta x^2}");
  envelope->add_option("--x", x)->required();
  envelope->add_option("--alpha", alpha)->required();

  auto* beta = eval->add_subcommand("beta", "Best exponential constant");
  beta->add_option("--alpha", alpha)->required();

  auto* lambda = eval->add_subcommand("lambda", "Odd-power sum I_k (closed form)");
  lambda->add_option("--k", lambda_k)->required();

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  std::string suite = "all";
  int grid_points = 64;
  double tol = 1e-12;
  std::string out_path;
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "lemma", "a-monotone", "ratio", "limit",
                             "convergence", "best-constant", "lambda"}));
  verify->add_option("--grid", grid_points)->check(CLI::PositiveNumber);
  auto* tol_option = verify->add_option("--tol", tol)->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path);

  // --- sweep ---
  auto* sweep = app.add_subcommand("sweep", "Emit bound/reference data for plotting");
  std::string family_name = "coshcos";
  std::string k0_list = "-1,0,1,2";
  int points = 64;
  std::string format = "csv";
  sweep->add_option("--family", family_name)
      ->required()
      ->check(CLI::IsMember({"coshcos", "sinhsin"}));
  sweep->add_option("--alpha", alpha)->required();
  sweep->add_option("--k0-list", k0_list);
  sweep->add_option("--points", points)->check(CLI::PositiveNumber);
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) {
      if (lemma->parsed()) {
        print_eval(rb::bernoulli_log_bound(u, v, k0), rb::log_ratio(u * v));
      } else if (coshcos->parsed()) {
        const auto result = rb::evaluate({x, alpha, k0, rb::Family::CoshCos});
        print_eval(result.bound, result.reference);
      } else if (sinhsin->parsed()) {
        const auto result = rb::evaluate({x, alpha, k0, rb::Family::SinhSin});
        print_eval(result.bound, result.reference);
      } else if (limit->parsed()) {
        print_eval(rb::coshcos_limit_bound(x), rb::ratio_coshcos(x));
      } else if (envelope->parsed()) {
        print_eval(rb::exp_envelope(x, alpha), rb::ratio_coshcos(x));
      } else if (beta->parsed()) {
        print_eval(rb::best_exp_constant(alpha), std::nullopt);
      } else if (lambda->parsed()) {
        print_eval(rb::lambda_sum_closed(lambda_k), std::nullopt);
      }
      return 0;
    }
    if (verify->parsed()) {
      return run_verify(suite, grid_points, tol, tol_option->count() > 0, out_path);
    }
    if (sweep->parsed()) {
      return run_sweep(family_name, alpha, k0_list, points, format);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run '" << argv[0] << " --help' for usage\n";
    return 2;
  } catch (const rb::accuracy_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
