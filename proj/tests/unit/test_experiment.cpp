#include "psg/experiment.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

std::string body(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (!line.starts_with("#")) out += line + "\n";
  }
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

TEST_CASE("run_experiment writes header, columns and summary") {
  psg::ExperimentConfig config;
  config.horizon = 2000;
  config.ks = {-1.0, 0.0, 1.0, 2.0};
  config.start = "random";
  config.seed = 4;
  config.stride = "all";
  std::ostringstream csv;
  std::ostringstream summary;
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitOk);

  const std::string text = csv.str();
  CHECK(text.find("# problem=l1-distance n=10") != std::string::npos);
  CHECK(text.find("# rng=mt19937_64") != std::string::npos);
  CHECK(text.find("# seed=4") != std::string::npos);
  CHECK(text.find("# ks=-1;0;1;2") != std::string::npos);
  CHECK(text.find("# version=") != std::string::npos);

  std::istringstream rows(body(text));
  std::string header;
  std::getline(rows, header);
  CHECK(header ==
        "s,eta_s,f_xs,gap_min,gap_avg_-1,bound_-1,gap_avg_0,bound_0,gap_avg_1,bound_1,gap_avg_2,bound_2");
  std::string line;
  std::size_t count = 0;
  while (std::getline(rows, line)) {
    const auto cells = split(line);
    REQUIRE(cells.size() == 12);
    for (std::size_t c = 4; c < cells.size(); c += 2) {
      REQUIRE(std::stod(cells[c]) <= std::stod(cells[c + 1]) * (1 + 1e-9));
      REQUIRE(std::stod(cells[c]) >= 0.0);
    }
    ++count;
  }
  CHECK(count == 2000);
  CHECK(summary.str().find("status=ok") != std::string::npos);
  CHECK(summary.str().find("violations=0") != std::string::npos);
}

TEST_CASE("trace bodies are deterministic") {
  psg::ExperimentConfig config;
  config.problem = "pwl-max";
  config.n = 4;
  config.m = 9;
  config.seed = 21;
  config.horizon = 3000;
  config.ks = {0.0, 0.5};
  config.check_invariants = true;
  std::ostringstream a, b, sa, sb;
  CHECK(psg::run_experiment(config, a, sa) == psg::kExitOk);
  CHECK(psg::run_experiment(config, b, sb) == psg::kExitOk);
  CHECK(a.str() == b.str());
  CHECK(sa.str().find("max_inequality_residual=") != std::string::npos);
}

TEST_CASE("values round-trip through the CSV") {
  for (double v : {0.1, 1.0 / 3.0, 2.718281828459045, 1e-300, 123456.789}) {
    CHECK(std::stod(psg::format_value(v)) == v);
  }
  CHECK(psg::format_label(-1.0) == "-1");
  CHECK(psg::format_label(0.5) == "0.5");
}

TEST_CASE("invalid configurations map to the usage status") {
  std::ostringstream csv, summary;
  psg::ExperimentConfig config;
  config.horizon = 0;
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);
  CHECK(summary.str().find("horizon") != std::string::npos);
  CHECK(csv.str().empty());

  config = {};
  config.ks = {};
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);
  config.ks = {-3.0};
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);
  config = {};
  config.problem = "nope";
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);
  config = {};
  config.set = "ball";  // l1-distance lives on a box
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);
  config = {};
  config.stride = "0";
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);
  config = {};
  config.start = "1,2";
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);
  config = {};
  config.schedule = "custom";
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);
}

TEST_CASE("numeric failure status") {
  std::ostringstream csv, summary;
  psg::ExperimentConfig config;
  config.horizon = 100;
  config.ks = {1000.0};
  config.start = "random";
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitNumeric);
  CHECK(summary.str().find("status=numeric-failure") != std::string::npos);
}

TEST_CASE("custom schedule through the experiment layer") {
  const auto path = std::filesystem::temp_directory_path() / "psg_experiment_schedule.txt";
  {
    std::ofstream out(path);
    for (int s = 1; s <= 200; ++s) out << 0.5 / s << "\n";
  }
  psg::ExperimentConfig config;
  config.problem = "linf-distance";
  config.n = 3;
  config.schedule = "custom";
  config.schedule_file = path.string();
  config.start = "0.5,-0.9,0.2";
  std::ostringstream csv, summary;
  config.horizon = 200;
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitOk);
  config.horizon = 201;
  CHECK(psg::run_experiment(config, csv, summary) == psg::kExitUsage);

  std::ostringstream verdict;
  CHECK(psg::validate_schedule_file(path.string(), std::nullopt, verdict) == psg::kExitOk);
  CHECK(psg::validate_schedule_file(path.string(), 201, verdict) == psg::kExitViolation);
  {
    std::ofstream out(path);
    out << "1.0\n1.1\n";
  }
  std::ostringstream increase;
  CHECK(psg::validate_schedule_file(path.string(), std::nullopt, increase) == psg::kExitViolation);
  CHECK(increase.str().find("s=2") != std::string::npos);
  CHECK(increase.str().find("reason=increase") != std::string::npos);
  std::filesystem::remove(path);
  std::ostringstream missing;
  CHECK(psg::validate_schedule_file(path.string(), std::nullopt, missing) == psg::kExitUsage);
}

TEST_CASE("compare_bounds table") {
  const auto rows = psg::compare_bounds(1, 1, {10, 4, 100, 1000, 10000});
  REQUIRE(rows.size() == 5);
  CHECK(rows[1].t == 4);
  CHECK(rows[1].sqrt_decay == 0.75);
  CHECK(rows[1].weighted_k0 == doctest::Approx(0.59806).epsilon(1e-5));
  for (const auto& row : rows) {
    CHECK(row.weighted_k0 <= row.sqrt_decay);
    CHECK(row.weighted_km1 <= row.log_factor * (1 + 1e-9));
  }
  const auto geometric = psg::compare_bounds(1, 1, {10, 100, 1000, 10000, 100000, 1000000});
  for (std::size_t i = 1; i < geometric.size(); ++i) {
    CHECK(geometric[i].ratio_km1_over_k0 >= geometric[i - 1].ratio_km1_over_k0);
  }
  std::ostringstream out;
  psg::write_bound_comparison_csv(out, 1, 1, rows);
  CHECK(out.str().find("t,Eq2,Thm1,Eq4_k0,Eq4_km1,Eq5,ratio_km1_over_k0\n") != std::string::npos);
  CHECK_THROWS_AS(psg::compare_bounds(1, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(psg::compare_bounds(1, 1, {0}), std::invalid_argument);
}
